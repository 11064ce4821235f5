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

#ifndef TREEMATCH_SRC_ROOTED_H_
#define TREEMATCH_SRC_ROOTED_H_

#include <vector>

#include "treematch/tree.h"

namespace treematch::internal {

// Parent pointers and a preorder for the tree rooted at `root`; iterate the
// preorder backwards for a bottom-up pass. parent[root] == -1.
struct Rooting {
  std::vector<int> parent;
  std::vector<int> preorder;
};

inline Rooting RootAt(const Tree& tree, int root = 0) {
  const int n = tree.order();
  Rooting r;
  r.parent.assign(n, -1);
  r.preorder.reserve(n);
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {root};
  seen[root] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    r.preorder.push_back(v);
    for (int w : tree.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        r.parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  return r;
}

}  // namespace treematch::internal

#endif  // TREEMATCH_SRC_ROOTED_H_
