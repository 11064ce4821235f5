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

#include "treematch/matching.h"

#include <algorithm>
#include <string>

#include "rooted.h"

namespace treematch {
namespace {

using Poly = std::vector<BigInt>;

Poly Multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly Add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

void Trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

void RequireOracleSize(const Tree& tree) {
  if (tree.order() > kBruteForceMaxOrder) {
    throw Error(ErrorCode::kTooLargeForOracle,
                "brute-force enumeration limited to order " +
                    std::to_string(kBruteForceMaxOrder));
  }
}

void Enumerate(const std::vector<Edge>& edges, std::size_t next,
               std::vector<char>& used, Matching& current,
               std::vector<Matching>& out) {
  if (next == edges.size()) {
    out.push_back(current);
    return;
  }
  Enumerate(edges, next + 1, used, current, out);
  const Edge& e = edges[next];
  if (!used[e.u] && !used[e.v]) {
    used[e.u] = used[e.v] = 1;
    current.push_back(e);
    Enumerate(edges, next + 1, used, current, out);
    current.pop_back();
    used[e.u] = used[e.v] = 0;
  }
}

Edge Ordered(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Visits each k-subset of items in lexicographic order.
template <typename Fn>
void ForEachSubset(const std::vector<int>& items, int k, Fn&& fn) {
  const int n = static_cast<int>(items.size());
  if (k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<int> subset(k);
  for (;;) {
    for (int i = 0; i < k; ++i) subset[i] = items[idx[i]];
    fn(subset);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void CheckStrongArgs(const Tree& tree, int k) {
  if (tree.order() < 2) {
    throw Error(ErrorCode::kOrderTooSmall,
                "strong almost-perfect matchings are undefined for n = 1");
  }
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
}

}  // namespace

MatchingProfile ComputeMatchingProfile(const Tree& tree) {
  const int n = tree.order();
  internal::Rooting r = internal::RootAt(tree);
  // free_[v]: v unmatched within its subtree; covered[v]: v matched to a
  // child. Coefficient k counts matchings of size k.
  std::vector<Poly> free_(n, Poly{1}), covered(n, Poly{0});
  for (auto it = r.preorder.rbegin(); it != r.preorder.rend(); ++it) {
    int v = *it;
    Trim(free_[v]);
    Trim(covered[v]);
    int p = r.parent[v];
    if (p < 0) continue;
    Poly child_any = Add(free_[v], covered[v]);
    // Matching the edge p-v needs both free, and adds one edge.
    Poly via_edge = Multiply(free_[p], free_[v]);
    via_edge.insert(via_edge.begin(), BigInt(0));
    covered[p] = Add(Multiply(covered[p], child_any), via_edge);
    free_[p] = Multiply(free_[p], child_any);
  }
  int root = r.preorder.front();
  Poly total = Add(free_[root], covered[root]);
  total.resize(n / 2 + 1);
  return total;
}

std::vector<Matching> BruteMatchings(const Tree& tree) {
  RequireOracleSize(tree);
  std::vector<Edge> edges = tree.edges();
  std::vector<char> used(tree.order(), 0);
  Matching current;
  std::vector<Matching> out;
  Enumerate(edges, 0, used, current, out);
  return out;
}

bool IsMaximal(const Tree& tree, const Matching& matching) {
  std::vector<char> covered(tree.order(), 0);
  for (const Edge& e : matching) covered[e.u] = covered[e.v] = 1;
  for (const Edge& e : tree.edges()) {
    if (!covered[e.u] && !covered[e.v]) return false;
  }
  return true;
}

std::optional<Matching> PerfectMatchingWithout(const Tree& tree,
                                               std::span<const int> removed) {
  const int n = tree.order();
  std::vector<char> alive(n, 1);
  for (int v : removed) alive[v] = 0;
  std::vector<int> degree(n, 0);
  std::vector<int> queue;
  for (int v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    for (int w : tree.neighbors(v)) degree[v] += alive[w];
    if (degree[v] <= 1) queue.push_back(v);
  }
  Matching matching;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    if (!alive[v]) continue;
    if (degree[v] == 0) return std::nullopt;
    int partner = -1;
    for (int w : tree.neighbors(v)) {
      if (alive[w]) {
        partner = w;
        break;
      }
    }
    alive[v] = alive[partner] = 0;
    matching.push_back(Ordered(v, partner));
    for (int w : tree.neighbors(partner)) {
      if (alive[w] && --degree[w] <= 1) queue.push_back(w);
    }
  }
  // Every nonempty forest component has a leaf, so nothing alive remains.
  std::sort(matching.begin(), matching.end());
  return matching;
}

BigInt CountApm(const Tree& tree) {
  const int n = tree.order();
  MatchingProfile profile = ComputeMatchingProfile(tree);
  int size = n % 2 == 1 ? (n - 1) / 2 : (n - 2) / 2;
  return profile[size];
}

BigInt CountKSapm(const Tree& tree, int k) {
  CheckStrongArgs(tree, k);
  if ((tree.order() - k) % 2 != 0) return 0;
  BigInt count = 0;
  ForEachSubset(tree.leaves(), k, [&](const std::vector<int>& subset) {
    if (PerfectMatchingWithout(tree, subset)) ++count;
  });
  return count;
}

std::vector<StrongMatching> ListKSapm(const Tree& tree, int k) {
  CheckStrongArgs(tree, k);
  std::vector<StrongMatching> out;
  if ((tree.order() - k) % 2 != 0) return out;
  ForEachSubset(tree.leaves(), k, [&](const std::vector<int>& subset) {
    if (auto m = PerfectMatchingWithout(tree, subset)) {
      out.push_back({subset, std::move(*m)});
    }
  });
  return out;
}

BigInt CountSapm(const Tree& tree) {
  return CountKSapm(tree, tree.order() % 2 == 1 ? 1 : 2);
}

BigInt CountMaximalMatchings(const Tree& tree) {
  const int n = tree.order();
  internal::Rooting r = internal::RootAt(tree);
  // matched: v matched to a child. settled: v unmatched, all children
  // covered. pending: v unmatched with an uncovered child; must match up.
  std::vector<BigInt> matched(n), settled(n), pending(n);
  // Running products over processed children.
  std::vector<BigInt> all_not_to_v(n, 1), all_matched(n, 1), one_to_v(n, 0);
  for (auto it = r.preorder.rbegin(); it != r.preorder.rend(); ++it) {
    int v = *it;
    matched[v] = one_to_v[v];
    settled[v] = all_matched[v];
    pending[v] = all_not_to_v[v] - all_matched[v];
    int p = r.parent[v];
    if (p < 0) continue;
    BigInt not_to_parent = matched[v] + settled[v];
    BigInt to_parent = settled[v] + pending[v];
    one_to_v[p] = one_to_v[p] * not_to_parent + all_not_to_v[p] * to_parent;
    all_not_to_v[p] *= not_to_parent;
    all_matched[p] *= matched[v];
  }
  int root = r.preorder.front();
  return matched[root] + settled[root];
}

std::vector<Matching> MaximalMatchings(const Tree& tree) {
  std::vector<Matching> out;
  for (Matching& m : BruteMatchings(tree)) {
    if (IsMaximal(tree, m)) out.push_back(std::move(m));
  }
  return out;
}

std::vector<int> MaximalMatchingDegreeSums(const Tree& tree) {
  if (tree.order() < 2) {
    throw Error(ErrorCode::kOrderTooSmall,
                "degree-sum bound needs at least two vertices");
  }
  std::vector<int> sums;
  for (const Matching& m : MaximalMatchings(tree)) {
    int sum = 0;
    for (const Edge& e : m) sum += tree.degree(e.u) + tree.degree(e.v);
    sums.push_back(sum);
  }
  return sums;
}

}  // namespace treematch
