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

#include "treematch/bounds.h"

#include <algorithm>
#include <string>

namespace treematch {
namespace {

void RequireOdd(int n, int min) {
  if (n % 2 == 0) {
    throw Error(ErrorCode::kOddOrder,
                "expected odd order, got " + std::to_string(n));
  }
  if (n < min) {
    throw Error(ErrorCode::kInvalidArgument,
                "order must be at least " + std::to_string(min));
  }
}

void RequireEven(int n, int min) {
  if (n % 2 != 0) {
    throw Error(ErrorCode::kOddOrder,
                "expected even order, got " + std::to_string(n));
  }
  if (n < min) {
    throw Error(ErrorCode::kInvalidArgument,
                "order must be at least " + std::to_string(min));
  }
}

FamilySpec Trio(int a, int b, int c) {
  return FamilySpec::Of(Family::kSpiderTrio, {a, b, c});
}

}  // namespace

BigInt OddApmMax(int n) {
  RequireOdd(n, 1);
  return (n + 1) / 2;
}

BigInt EvenApmMax(int n) {
  RequireEven(n, 2);
  return BigInt(n) * (n + 2) / 8;
}

BigInt MatchingsOfSizeMax(int n, int k) {
  if (k < 1 || n < 2 * k + 2) {
    throw Error(ErrorCode::kInvalidArgument, "needs k >= 1 and n >= 2k+2");
  }
  return Binomial(n - k, k);
}

BigInt OddSapmMax(int n) {
  RequireOdd(n, 5);
  return (n - 1) / 2;
}

BigInt PerfectSapmMax(int n) {
  RequireEven(n, 2);
  return std::max({1, (n - 2) / 2, (n - 2) * (n - 2) / 16});
}

BigInt EvenSapmMax(int n) { return FTable(n).value; }

BigInt MinMaximalMatchings(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "order must be >= 1");
  return (n + 1) / 2;
}

FTableEntry FTable(int n) {
  RequireEven(n, 2);
  FTableEntry entry;
  if (n <= 6) {
    entry.value = 3 * n / 4;
    if (n == 2) entry.families = {FamilySpec::Of(Family::kPath, {2})};
    if (n == 4) entry.families = {FamilySpec::Of(Family::kStar, {4})};
    if (n == 6) entry.families = {FamilySpec::Of(Family::kDoubleBroom, {2, 2})};
  } else if (n <= 14) {
    entry.value = n - 3;
    entry.families = {FamilySpec::Of(Family::kSpecialSpider, {n})};
    if (n == 14) entry.families.push_back(Trio(3, 2, 0));
  } else if (n < 28) {
    entry.value = n * n / 16 - 1;
    entry.families = {Trio((n - 4 + 3) / 4, (n - 4) / 4, 0)};
  } else if (n == 28) {
    entry.value = 48;
    entry.families = {Trio(6, 6, 0), Trio(4, 4, 4)};
  } else {
    entry.value = BigInt(n - 4) * (n - 4) / 12;
    entry.families = {Trio(n / 6, (n - 2) / 6, (n - 4) / 6)};
  }
  return entry;
}

const std::vector<BoundFormula>& BoundFormulas() {
  static const std::vector<BoundFormula> kFormulas = {
      {"odd-apm", [](int n) { return n >= 1 && n % 2 == 1; }, OddApmMax},
      {"even-apm", [](int n) { return n >= 2 && n % 2 == 0; }, EvenApmMax},
      {"mk2", [](int n) { return n >= 6; },
       [](int n) { return MatchingsOfSizeMax(n, 2); }},
      {"mk3", [](int n) { return n >= 8; },
       [](int n) { return MatchingsOfSizeMax(n, 3); }},
      {"mk4", [](int n) { return n >= 10; },
       [](int n) { return MatchingsOfSizeMax(n, 4); }},
      {"odd-sapm", [](int n) { return n >= 5 && n % 2 == 1; }, OddSapmMax},
      {"pm-sapm", [](int n) { return n >= 2 && n % 2 == 0; }, PerfectSapmMax},
      {"sapm-f", [](int n) { return n >= 2 && n % 2 == 0; }, EvenSapmMax},
      {"min-maximal", [](int n) { return n >= 1; }, MinMaximalMatchings},
  };
  return kFormulas;
}

}  // namespace treematch
