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

#ifndef TREEMATCH_BOUNDS_H_
#define TREEMATCH_BOUNDS_H_

#include <functional>
#include <string>
#include <vector>

#include "treematch/common.h"
#include "treematch/family.h"

namespace treematch {

// Closed-form extremal values over all trees of order n. Each throws
// Error(kOddOrder) or Error(kInvalidArgument) outside its domain.

// Most almost-perfect matchings, odd n: (n+1)/2.
BigInt OddApmMax(int n);
// Most almost-perfect matchings, even n: n(n+2)/8.
BigInt EvenApmMax(int n);
// Most matchings of size k, n >= 2k+2: C(n-k, k), attained by the path.
BigInt MatchingsOfSizeMax(int n, int k);
// Most strong almost-perfect matchings, odd n >= 5: (n-1)/2.
BigInt OddSapmMax(int n);
// Same, over even-order trees with a perfect matching:
// max{1, (n-2)/2, floor((n-2)^2/16)}.
BigInt PerfectSapmMax(int n);
// Same, over all even-order trees.
BigInt EvenSapmMax(int n);
// Fewest maximal matchings: ceil(n/2).
BigInt MinMaximalMatchings(int n);

// Piecewise value for even n and the trees attaining it.
struct FTableEntry {
  BigInt value;
  std::vector<FamilySpec> families;
};

// Throws Error(kOddOrder) for odd n and Error(kInvalidArgument) for n < 2.
FTableEntry FTable(int n);

struct BoundFormula {
  std::string name;
  std::function<bool(int n)> domain;
  std::function<BigInt(int n)> value;
};

// Every bound above keyed by short name: "odd-apm", "even-apm", "mk2",
// "mk3", "mk4", "odd-sapm", "pm-sapm", "sapm-f", "min-maximal".
const std::vector<BoundFormula>& BoundFormulas();

}  // namespace treematch

#endif  // TREEMATCH_BOUNDS_H_
