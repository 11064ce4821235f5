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

#ifndef TREEMATCH_MATCHING_H_
#define TREEMATCH_MATCHING_H_

#include <optional>
#include <span>
#include <vector>

#include "treematch/common.h"
#include "treematch/tree.h"

namespace treematch {

// Edges of a matching, each with u < v, sorted.
using Matching = std::vector<Edge>;

// m_k for k = 0..floor(n/2).
using MatchingProfile = std::vector<BigInt>;

inline constexpr int kBruteForceMaxOrder = 26;

// Rooted two-state dynamic program (root free / root matched to a child)
// over polynomials in the matching size; O(n^2) big-integer operations.
MatchingProfile ComputeMatchingProfile(const Tree& tree);

// Every matching including the empty one. Throws Error(kTooLargeForOracle)
// above kBruteForceMaxOrder.
std::vector<Matching> BruteMatchings(const Tree& tree);

// A matching is maximal iff no edge has both endpoints uncovered.
bool IsMaximal(const Tree& tree, const Matching& matching);

// The unique perfect matching of the forest obtained by deleting `removed`
// from the tree, found by repeatedly matching a leaf to its only neighbor.
std::optional<Matching> PerfectMatchingWithout(const Tree& tree,
                                               std::span<const int> removed);

inline std::optional<Matching> PerfectMatching(const Tree& tree) {
  return PerfectMatchingWithout(tree, {});
}

// Matchings that miss one vertex (odd n) or two vertices (even n).
BigInt CountApm(const Tree& tree);

// A k-SAPM is a matching covering everything except k leaves; it is
// determined by its avoided leaf set.
struct StrongMatching {
  std::vector<int> avoided;
  Matching matching;
};

// Iterates the k-subsets of leaves and tests the rest for a perfect matching.
// Zero when n - k is odd. Throws Error(kOrderTooSmall) for n = 1 and
// Error(kInvalidArgument) for k < 1.
BigInt CountKSapm(const Tree& tree, int k);
std::vector<StrongMatching> ListKSapm(const Tree& tree, int k);

// k = 1 for odd n, k = 2 for even n.
BigInt CountSapm(const Tree& tree);

// Three-state rooted dynamic program: vertex matched below; vertex unmatched
// with every child covered; vertex unmatched with an uncovered child, which
// forces a match to the parent.
BigInt CountMaximalMatchings(const Tree& tree);

// Sum of deg(u) + deg(v) over the edges of each maximal matching, listed in
// the order of MaximalMatchings(). Throws Error(kOrderTooSmall) for n = 1.
std::vector<int> MaximalMatchingDegreeSums(const Tree& tree);
std::vector<Matching> MaximalMatchings(const Tree& tree);

}  // namespace treematch

#endif  // TREEMATCH_MATCHING_H_
