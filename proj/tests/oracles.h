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

// Slow reference implementations shared by the tests. Nothing here calls the
// library's counting or canonical-form code.

#ifndef TREEMATCH_TESTS_ORACLES_H_
#define TREEMATCH_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "treematch/common.h"
#include "treematch/tree.h"

namespace treematch::oracle {

// Every labeled tree on n >= 2 vertices via Prüfer sequences.
inline void ForEachLabeledTree(int n, const std::function<void(const Tree&)>& f) {
  if (n == 1) {
    f(Tree());
    return;
  }
  std::vector<int> seq(n - 2, 0);
  while (true) {
    std::vector<int> degree(n, 1);
    for (int x : seq) ++degree[x];
    std::vector<Edge> edges;
    std::vector<int> d = degree;
    for (int x : seq) {
      int leaf = 0;
      while (d[leaf] != 1) ++leaf;
      edges.push_back({std::min(leaf, x), std::max(leaf, x)});
      --d[leaf];
      --d[x];
    }
    int u = -1, v = -1;
    for (int i = 0; i < n; ++i) {
      if (d[i] == 1) (u < 0 ? u : v) = i;
    }
    edges.push_back({u, v});
    f(Tree::FromEdges(n, edges));
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
}

// Rooted code by plain recursion; minimum over every root. Quadratic but
// independent of centroid handling.
inline std::string RootedString(const Tree& t, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : t.neighbors(v)) {
    if (w != parent) kids.push_back(RootedString(t, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "[";
  for (const auto& k : kids) s += k;
  return s + "]";
}

inline std::string BruteCode(const Tree& t) {
  std::string best;
  for (int r = 0; r < t.order(); ++r) {
    std::string s = RootedString(t, r, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

// All matchings by subset enumeration over the edge set.
inline std::vector<std::vector<Edge>> AllMatchings(const Tree& t) {
  std::vector<Edge> edges = t.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<std::vector<Edge>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<int> used(t.order(), 0);
    bool ok = true;
    std::vector<Edge> chosen;
    for (int i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      ok = !used[edges[i].u] && !used[edges[i].v];
      used[edges[i].u] = used[edges[i].v] = 1;
      chosen.push_back(edges[i]);
    }
    if (ok) out.push_back(std::move(chosen));
  }
  return out;
}

struct BruteCounts {
  std::vector<BigInt> profile;
  BigInt apm = 0;
  std::vector<BigInt> ksapm;  // index k
  BigInt maximal = 0;
};

inline BruteCounts Count(const Tree& t, int max_k = 4) {
  const int n = t.order();
  BruteCounts c;
  c.profile.assign(n / 2 + 1, 0);
  c.ksapm.assign(max_k + 1, 0);
  for (const auto& m : AllMatchings(t)) {
    ++c.profile[m.size()];
    std::vector<int> covered(n, 0);
    for (const Edge& e : m) covered[e.u] = covered[e.v] = 1;
    const int uncovered = n - 2 * static_cast<int>(m.size());
    if (uncovered == (n % 2 == 1 ? 1 : 2)) ++c.apm;
    bool all_leaves = true;
    for (int v = 0; v < n; ++v) {
      if (!covered[v] && t.degree(v) != 1) all_leaves = false;
    }
    if (all_leaves && uncovered >= 1 && uncovered <= max_k) ++c.ksapm[uncovered];
    bool maximal = true;
    for (const Edge& e : t.edges()) {
      if (!covered[e.u] && !covered[e.v]) maximal = false;
    }
    if (maximal) ++c.maximal;
  }
  return c;
}

// Sum over matchings of the product of weight(deg u, deg v).
template <typename T>
T WeightedSum(const Tree& t, const std::function<T(int, int)>& weight) {
  T total = 0;
  for (const auto& m : AllMatchings(t)) {
    T term = 1;
    for (const Edge& e : m) term *= weight(t.degree(e.u), t.degree(e.v));
    total += term;
  }
  return total;
}

}  // namespace treematch::oracle

#endif  // TREEMATCH_TESTS_ORACLES_H_
