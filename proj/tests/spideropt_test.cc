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

#include <cmath>

#include "treematch/bounds.h"
#include "treematch/canonical.h"
#include "treematch/family.h"
#include "treematch/matching.h"
#include "treematch/spideropt.h"

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

// (b^2 + (2c + 2d)b + d^2)a^2 + 2c((c + 2d)b + d^2)a + c^2 d^2
BigInt Factored(BigInt a, BigInt b, BigInt c, BigInt d) {
  return (b * b + (2 * c + 2 * d) * b + d * d) * a * a +
         2 * c * ((c + 2 * d) * b + d * d) * a + c * c * d * d;
}

TEST(ChainPolynomialTest, SymmetricEightCenters) {
  std::vector<int> index = MirroredIndex(8);
  EXPECT_EQ(index, (std::vector<int>{0, 1, 2, 3, 3, 2, 1, 0}));
  Polynomial p = ChainPolynomial(8, 4, index);
  std::vector<std::string> names = {"a", "b", "c", "d"};
  EXPECT_EQ(p.ToString(names),
            "a^2*b^2 + 2*a^2*b*c + 2*a^2*b*d + a^2*d^2 + 2*a*b*c^2 + "
            "4*a*b*c*d + 2*a*c*d^2 + c^2*d^2");
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      for (int c = 0; c <= 4; ++c) {
        for (int d = 0; d <= 4; ++d) {
          std::vector<BigInt> x = {a, b, c, d};
          ASSERT_EQ(p.Evaluate(x), Factored(a, b, c, d));
        }
      }
    }
  }
}

TEST(ChainCountTest, AgreesWithTreeCount) {
  std::vector<std::vector<int>> profiles = {
      {1, 1}, {2, 1}, {1, 2, 1}, {2, 1, 1, 2}, {1, 0, 2, 1},
      {3, 1, 2}, {2, 2, 2, 2}, {1, 1, 1, 1, 1, 1}, {0, 1, 0, 1}};
  for (const auto& legs : profiles) {
    ChainProfile profile{legs};
    Tree t = profile.Realize();
    ASSERT_EQ(t.order(), profile.order());
    EXPECT_TRUE(Isomorphic(
        t, MakeFamily(FamilySpec::Of(Family::kSpiderChain, legs))));
    for (int k = 1; k <= 4; ++k) {
      if ((profile.order() - k) % 2 != 0) {
        EXPECT_EQ(CodeOf([&] { KSapmChainCount(profile, k); }),
                  ErrorCode::kParityMismatch);
        continue;
      }
      EXPECT_EQ(KSapmChainCount(profile, k), CountKSapm(t, k))
          << ToString(FamilySpec::Of(Family::kSpiderChain, legs)) << " k=" << k;
    }
  }
}

TEST(ChainCountTest, EightCenterProfilesMatchFactoredForm) {
  for (auto [a, b, c, d] : {std::array{1, 1, 1, 1}, std::array{2, 1, 1, 1},
                            std::array{3, 2, 1, 2}}) {
    ChainProfile profile{{a, b, c, d, d, c, b, a}};
    EXPECT_EQ(KSapmChainCount(profile, 4), Factored(a, b, c, d));
    if (profile.order() <= 40) {
      EXPECT_EQ(CountKSapm(profile.Realize(), 4), Factored(a, b, c, d));
    }
  }
}

TEST(ChainCountTest, SkeletonMatchesChain) {
  ChainProfile profile{{2, 1, 3, 1}};
  Tree path = MakePath(4);
  for (int k : {2, 4}) {
    EXPECT_EQ(KSapmSkeletonCount(path, profile.legs, k),
              KSapmChainCount(profile, k));
  }
}

TEST(ChainCountTest, NoLegs) {
  // A bare path of even order has no leaves left after its ends.
  ChainProfile profile{{0, 0, 0, 0}};
  EXPECT_EQ(KSapmChainCount(profile, 2), CountKSapm(MakePath(4), 2));
  EXPECT_EQ(KSapmChainCount(profile, 4), 0);
}

TEST(WheelTest, Counts) {
  for (int k = 1; k <= 3; ++k) {
    for (int a = 1; a <= 2; ++a) {
      Tree t = MakeKSpiderWheel(k, a);
      EXPECT_EQ(t.order(), (k + 1) * (2 * a + 1) + 1);
      EXPECT_EQ(CountKSapm(t, k), KSpiderWheelCount(k, a)) << k << "," << a;
    }
  }
  EXPECT_EQ(KSpiderWheelCount(2, 3), 27);
  EXPECT_EQ(CodeOf([] { KSpiderWheelCount(0, 1); }), ErrorCode::kBadFamilyParams);
}

TEST(OptimizeTest, ContinuousSymmetricRatio) {
  OptimizeOptions options;
  options.m = 8;
  options.k = 4;
  options.symmetric = true;
  OptimizeResult r = OptimizeLeafDistribution(options);
  const double expected[] = {27.0 / 16, 1.0, 9.0 / 16, 3.0 / 4};
  ASSERT_EQ(r.ratio.size(), 4u);
  double sum = 0;
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(r.ratio[i], expected[i], 1e-6 * expected[i]) << i;
    sum += r.ratio[i];
  }
  EXPECT_NEAR(sum, 4.0, 1e-12);
  EXPECT_LT(r.gradient_norm, 1e-8);
  EXPECT_LE(r.finite_difference_error, 1e-6);
  EXPECT_EQ(r.polynomial,
            "a^2*b^2 + 2*a^2*b*c + 2*a^2*b*d + a^2*d^2 + 2*a*b*c^2 + "
            "4*a*b*c*d + 2*a*c*d^2 + c^2*d^2");
}

TEST(OptimizeTest, ContinuousDominatesIntegerOptimum) {
  OptimizeOptions options;
  options.symmetric = true;
  options.total_legs = 40;
  OptimizeResult cont = OptimizeLeafDistribution(options);
  options.mode = OptimizeMode::kInteger;
  OptimizeResult integer = OptimizeLeafDistribution(options);
  EXPECT_GE(cont.value * (1 + 1e-12), integer.integer_value.convert_to<double>());
}

TEST(OptimizeTest, Deterministic) {
  OptimizeOptions options;
  options.m = 6;
  options.k = 2;
  OptimizeResult a = OptimizeLeafDistribution(options);
  OptimizeResult b = OptimizeLeafDistribution(options);
  EXPECT_EQ(a.point, b.point);
  options.seed = 7;
  OptimizeResult c = OptimizeLeafDistribution(options);
  // The optimum set of this chain is not a single point; the value is.
  EXPECT_NEAR(a.value, c.value, 1e-9 * a.value);

  options = {};
  options.symmetric = true;
  OptimizeResult d = OptimizeLeafDistribution(options);
  options.seed = 7;
  OptimizeResult e = OptimizeLeafDistribution(options);
  for (std::size_t i = 0; i < d.ratio.size(); ++i) {
    EXPECT_NEAR(d.ratio[i], e.ratio[i], 1e-6);
  }
}

TEST(OptimizeTest, IntegerTwoCenters) {
  for (int s = 1; s <= 6; ++s) {
    OptimizeOptions options;
    options.m = 2;
    options.k = 2;
    options.total_legs = 2 * s;
    options.mode = OptimizeMode::kInteger;
    OptimizeResult r = OptimizeLeafDistribution(options);
    EXPECT_EQ(r.profile, (std::vector<int>{s, s}));
    EXPECT_TRUE(r.exhaustive);
  }
}

TEST(OptimizeTest, IntegerEightCentersFortyLegs) {
  OptimizeOptions options;
  options.symmetric = true;
  options.total_legs = 40;
  options.mode = OptimizeMode::kInteger;
  OptimizeResult r = OptimizeLeafDistribution(options);
  ASSERT_EQ(r.profile.size(), 4u);
  const double target[] = {20.0 * 27 / 64, 20.0 * 16 / 64, 20.0 * 9 / 64,
                           20.0 * 12 / 64};
  for (int i = 0; i < 4; ++i) EXPECT_LE(std::abs(r.profile[i] - target[i]), 1.0) << i;
  EXPECT_TRUE(r.exhaustive);
  // Exhaustive over every symmetric composition with parts >= 1.
  BigInt best = 0;
  for (int a = 1; a <= 17; ++a)
    for (int b = 1; a + b <= 18; ++b)
      for (int c = 1; a + b + c <= 19; ++c) {
        int d = 20 - a - b - c;
        best = std::max(best, Factored(a, b, c, d));
      }
  EXPECT_EQ(r.integer_value, best);
}

TEST(OptimizeTest, Errors) {
  OptimizeOptions options;
  options.m = 7;
  options.k = 4;
  EXPECT_EQ(CodeOf([&] { OptimizeLeafDistribution(options); }),
            ErrorCode::kInfeasibleParity);
  options.m = 1;
  EXPECT_EQ(CodeOf([&] { OptimizeLeafDistribution(options); }),
            ErrorCode::kInvalidArgument);
  options = {};
  options.symmetric = true;
  options.total_legs = 41;
  EXPECT_EQ(CodeOf([&] { OptimizeLeafDistribution(options); }),
            ErrorCode::kInvalidArgument);
  options = {};
  options.mode = OptimizeMode::kInteger;
  options.total_legs = 3;
  EXPECT_EQ(CodeOf([&] { OptimizeLeafDistribution(options); }),
            ErrorCode::kInvalidArgument);
}

TEST(GrowthTest, Rows) {
  std::vector<int> orders = {22};
  auto rows = KsapmGrowthCheck(2, orders);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].a, 3);
  EXPECT_EQ(rows[0].wheel_count, 27);
  EXPECT_EQ(rows[0].binomial, 231);
  EXPECT_GE(rows[0].best_known, rows[0].wheel_count);

  orders = {89};
  rows = KsapmGrowthCheck(7, orders);
  EXPECT_EQ(rows[0].wheel_count, BigInt(8) * 78125);
  EXPECT_LE(rows[0].wheel_count, rows[0].binomial);

  orders = {7, 11, 15};
  rows = KsapmGrowthCheck(1, orders);
  for (const auto& row : rows) {
    EXPECT_EQ(row.best_known, (row.n - 1) / 2);
    EXPECT_EQ(row.best_known, CountSapm(MakeSpider(row.n)));
  }

  orders = {23};
  EXPECT_EQ(CodeOf([&] { KsapmGrowthCheck(2, orders); }),
            ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace treematch
