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

#include <gtest/gtest.h>

#include <set>

#include "treematch/bounds.h"
#include "treematch/canonical.h"
#include "treematch/family.h"
#include "treematch/matching.h"

namespace treematch {
namespace {

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

std::set<CanonicalCode> Codes(const FTableEntry& e) {
  std::set<CanonicalCode> out;
  for (const auto& spec : e.families) out.insert(Canonicalize(MakeFamily(spec)));
  return out;
}

TEST(BoundsTest, ClosedForms) {
  EXPECT_EQ(OddApmMax(9), 5);
  EXPECT_EQ(EvenApmMax(6), 6);
  EXPECT_EQ(EvenApmMax(16), 36);
  EXPECT_EQ(MatchingsOfSizeMax(10, 3), 35);
  EXPECT_EQ(OddSapmMax(9), 4);
  EXPECT_EQ(PerfectSapmMax(2), 1);
  EXPECT_EQ(PerfectSapmMax(8), 3);
  EXPECT_EQ(PerfectSapmMax(12), 6);
  EXPECT_EQ(PerfectSapmMax(16), 12);
  EXPECT_EQ(MinMaximalMatchings(10), 5);
  EXPECT_EQ(MinMaximalMatchings(11), 6);
  EXPECT_EQ(CodeOf([] { OddApmMax(8); }), ErrorCode::kOddOrder);
  EXPECT_EQ(CodeOf([] { EvenApmMax(7); }), ErrorCode::kOddOrder);
  EXPECT_EQ(CodeOf([] { MatchingsOfSizeMax(7, 3); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { OddSapmMax(3); }), ErrorCode::kInvalidArgument);
}

TEST(FTableTest, Examples) {
  FTableEntry f6 = FTable(6);
  EXPECT_EQ(f6.value, 4);
  EXPECT_EQ(Codes(f6), std::set<CanonicalCode>{Canonicalize(MakeDoubleBroom(2, 2))});

  FTableEntry f14 = FTable(14);
  EXPECT_EQ(f14.value, 11);
  std::set<CanonicalCode> expected = {Canonicalize(MakeSpecialSpider(14)),
                                      Canonicalize(MakeSpiderTrio(3, 2, 0))};
  EXPECT_EQ(Codes(f14), expected);

  FTableEntry f28 = FTable(28);
  EXPECT_EQ(f28.value, 48);
  expected = {Canonicalize(MakeSpiderTrio(6, 6, 0)),
              Canonicalize(MakeSpiderTrio(4, 4, 4))};
  EXPECT_EQ(Codes(f28), expected);
  EXPECT_EQ(BigInt(28 * 28 / 16 - 1), BigInt(24 * 24 / 12));
}

TEST(FTableTest, Ranges) {
  EXPECT_EQ(FTable(2).value, 1);
  EXPECT_EQ(FTable(4).value, 3);
  for (int n = 8; n <= 14; n += 2) EXPECT_EQ(FTable(n).value, n - 3);
  EXPECT_EQ(FTable(16).value, 15);
  for (int n = 16; n <= 26; n += 2) EXPECT_EQ(FTable(n).value, n * n / 16 - 1);
  for (int n = 30; n <= 60; n += 2) EXPECT_EQ(FTable(n).value, (n - 4) * (n - 4) / 12);
  EXPECT_EQ(CodeOf([] { FTable(9); }), ErrorCode::kOddOrder);
  EXPECT_EQ(CodeOf([] { FTable(0); }), ErrorCode::kInvalidArgument);
}

TEST(FTableTest, FamiliesAttainValue) {
  for (int n = 2; n <= 60; n += 2) {
    FTableEntry f = FTable(n);
    ASSERT_FALSE(f.families.empty()) << n;
    for (const auto& spec : f.families) {
      Tree t = MakeFamily(spec);
      EXPECT_EQ(t.order(), n) << ToString(spec);
      EXPECT_EQ(CountSapm(t), f.value) << ToString(spec);
    }
  }
}

TEST(BoundFormulaTest, Registry) {
  std::set<std::string> names;
  for (const auto& b : BoundFormulas()) {
    names.insert(b.name);
    for (int n = 1; n <= 40; ++n) {
      if (b.domain(n)) EXPECT_NO_THROW(b.value(n)) << b.name << " " << n;
    }
  }
  std::set<std::string> expected = {"odd-apm", "even-apm", "mk2", "mk3", "mk4",
                                    "odd-sapm", "pm-sapm", "sapm-f", "min-maximal"};
  EXPECT_EQ(names, expected);
}

}  // namespace
}  // namespace treematch
