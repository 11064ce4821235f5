// Copyright 2026 The treematch Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "treematch/canonical.h"

#include <algorithm>
#include <vector>

namespace treematch {

std::string RootedCode(const Tree& tree, int root) {
  const int n = tree.order();
  std::vector<int> parent(n, -1), order;
  order.reserve(n);
  std::vector<int> stack = {root};
  parent[root] = root;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : tree.neighbors(v)) {
      if (parent[w] < 0) {
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<std::vector<std::string>> child_codes(n);
  std::vector<std::string> code(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    auto& kids = child_codes[v];
    std::sort(kids.begin(), kids.end());
    std::size_t length = 2;
    for (const auto& k : kids) length += k.size();
    std::string& out = code[v];
    out.reserve(length);
    out.push_back('(');
    for (const auto& k : kids) out += k;
    out.push_back(')');
    kids.clear();
    kids.shrink_to_fit();
    if (v != root) child_codes[parent[v]].push_back(std::move(out));
  }
  return code[root];
}

CanonicalCode Canonicalize(const Tree& tree) {
  std::vector<int> centroids = Centroids(tree);
  std::string best = RootedCode(tree, centroids[0]);
  if (centroids.size() == 2) {
    std::string other = RootedCode(tree, centroids[1]);
    if (other < best) best = std::move(other);
  }
  return CanonicalCode(std::move(best));
}

bool Isomorphic(const Tree& a, const Tree& b) {
  if (a.order() != b.order()) return false;
  std::vector<int> da = a.degrees(), db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return Canonicalize(a) == Canonicalize(b);
}

}  // namespace treematch
