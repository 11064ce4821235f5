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

#ifndef TREEMATCH_SPIDEROPT_H_
#define TREEMATCH_SPIDEROPT_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "treematch/common.h"
#include "treematch/polynomial.h"
#include "treematch/tree.h"

namespace treematch {

// Leg counts l_1..l_m of the spider centers along a path. The realized tree
// is MakeSpiderChain(legs), of order m + 2 * sum(l).
struct ChainProfile {
  std::vector<int> legs;

  int order() const;
  Tree Realize() const;
};

// k-SAPMs of a tree made of spider centers joined by a skeleton tree, center
// v carrying legs[v] legs of length 2. Each k-SAPM picks k centers that each
// give up one leaf (one of their legs, or the center itself when it is a
// leaf of the whole tree); the other centers must be perfectly matched in
// the skeleton. Subset enumeration; skeleton order is limited to 30.
BigInt KSapmSkeletonCount(const Tree& skeleton, std::span<const int> legs,
                          int k);

// The same count on a path skeleton, by a linear tiling recurrence. Throws
// Error(kParityMismatch) when the realized order minus k is odd.
BigInt KSapmChainCount(const ChainProfile& profile, int k);

// (k+1) * a^k, the k-SAPM count of MakeKSpiderWheel(k, a).
BigInt KSpiderWheelCount(int k, int a);

// Generic chain count as a polynomial: variable var_index[i] stands for the
// leg count of center i (so a mirrored chain can share variables). Centers
// are assumed to carry at least one leg.
Polynomial ChainPolynomial(int m, int k, std::span<const int> var_index);
// var_index for a mirrored chain of length m: i -> min(i, m-1-i).
std::vector<int> MirroredIndex(int m);

enum class OptimizeMode { kInteger, kContinuous };

inline constexpr std::uint64_t kDefaultSeed = 20240229;

struct OptimizeOptions {
  int m = 8;
  int k = 4;
  // Legs over the whole chain. Zero picks the number of free variables, so
  // the continuous point is already mean-normalized.
  int total_legs = 0;
  // Mirror-symmetric profiles (l_i = l_{m+1-i}); m must be even.
  bool symmetric = false;
  OptimizeMode mode = OptimizeMode::kContinuous;
  std::uint64_t seed = kDefaultSeed;
  int starts = 16;
};

inline constexpr long long kExhaustiveCompositionLimit = 1'000'000;

struct OptimizeResult {
  OptimizeMode mode = OptimizeMode::kContinuous;
  int variables = 0;
  double total = 0;
  // Integer mode: the best composition with every part >= 1, one entry per
  // free variable. Exhaustive up to kExhaustiveCompositionLimit candidates,
  // else a local search over single-leg transfers.
  std::vector<int> profile;
  BigInt integer_value = 0;
  bool exhaustive = false;
  // Continuous mode: the best point on the simplex and its value.
  std::vector<double> point;
  double value = 0;
  // point scaled to mean 1 (integer mode: the profile, likewise).
  std::vector<double> ratio;
  // Norm of the gradient projected onto the simplex face at the point.
  double gradient_norm = 0;
  // Largest relative gap between the analytic gradient and central finite
  // differences at the point.
  double finite_difference_error = 0;
  std::string polynomial;
};

// Throws Error(kInfeasibleParity) when m - k is odd, Error(kInvalidArgument)
// for m < 2, k < 1, total_legs < 0, an odd m with symmetric set, or (integer
// mode) fewer legs than free variables.
OptimizeResult OptimizeLeafDistribution(const OptimizeOptions& options);

// Projected gradient of p at x on {sum x = const, x >= 0}.
double ProjectedGradientNorm(const Polynomial& p, std::span<const double> x);

struct GrowthRow {
  int n = 0;
  int k = 0;
  int a = 0;
  BigInt wheel_count;
  // Best count among the known constructions of this order (wheel, spider
  // for k = 1, the even-order table for k = 2).
  BigInt best_known;
  std::string best_known_family;
  BigInt binomial;
};

// Throws Error(kInvalidArgument) unless n = (k+1)(2a+1) + 1 for some a >= 1.
std::vector<GrowthRow> KsapmGrowthCheck(int k, std::span<const int> orders);

}  // namespace treematch

#endif  // TREEMATCH_SPIDEROPT_H_
