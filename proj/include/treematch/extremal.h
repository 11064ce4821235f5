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

#ifndef TREEMATCH_EXTREMAL_H_
#define TREEMATCH_EXTREMAL_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "treematch/canonical.h"
#include "treematch/common.h"
#include "treematch/hosoya.h"
#include "treematch/tree.h"
#include "treematch/treegen.h"

namespace treematch {

// Value of a statistic on one tree. Integers, exact rationals and reals
// compare numerically with each other; symbolic sums compare as c grows;
// golden numbers compare exactly.
using StatValue =
    std::variant<BigInt, Rational, Real, SymbolicIndex, GoldenNumber>;

// Throws Error(kMixedKinds) across the numeric / symbolic / golden groups.
std::strong_ordering Compare(const StatValue& a, const StatValue& b);
std::string ToString(const StatValue& value);
nlohmann::json ToJson(const StatValue& value);

struct Statistic {
  std::string name;
  std::function<StatValue(const Tree&)> evaluate;
  // Trees outside the domain are skipped by scans. Empty means every tree.
  std::function<bool(const Tree&)> domain;
};

// Selectors: apm, sapm, pm-sapm (sapm over trees with a perfect matching),
// ksapm:K, maximal, mk:K, hosoya, phi1..phi4 (symbolic, large c),
// phi1:c=V .. phi4:c=V (numeric), golden16, table:@file.
// Throws Error(kParseError) for unknown selectors.
Statistic MakeStatistic(std::string_view selector);
std::vector<std::string> StatisticSelectors();

enum class Objective { kMax, kMin };
std::string_view ToString(Objective objective);

struct ScanOptions {
  int threads = 1;
  int max_order = kDefaultMaxOrder;
};

struct ScanReport {
  int n = 0;
  std::string statistic;
  Objective objective = Objective::kMax;
  StatValue value;
  // Canonical codes of every tree attaining the value, sorted.
  std::vector<CanonicalCode> argmax;
  // One representative tree per code, same order.
  std::vector<Tree> argmax_trees;
  std::int64_t classes_scanned = 0;
  std::int64_t classes_in_domain = 0;
  double elapsed_seconds = 0;
  int threads = 1;
};

// Exhaustive scan over all free trees of order n. Propagates
// Error(kOrderTooLarge) / Error(kOrderTooSmall) from the generator;
// Error(kInvalidArgument) when no tree lies in the statistic's domain.
ScanReport Scan(int n, const Statistic& statistic, Objective objective,
                const ScanOptions& options = {});

inline constexpr std::string_view kScanSchema = "treematch.scan/1";
inline constexpr std::string_view kBatterySchema = "treematch.battery/1";

// include_meta adds timing and thread count; without it the output depends
// only on the inputs.
nlohmann::json ToJson(const ScanReport& report, bool include_meta);

struct BatteryConfig {
  // Empty means every check.
  std::vector<std::string> theorems;
  int threads = 1;
  int max_order = kDefaultMaxOrder;
  // Checks that enumerate every matching of every tree stop here.
  int oracle_max_order = 12;
  // Numeric minimum checks over a grid of c stop here.
  int numeric_max_order = 10;
  // Large-c maximum checks stop here.
  int symbolic_max_order = 14;
};

struct CheckRow {
  std::string theorem;
  int n = 0;
  std::string expected;
  std::string observed;
  std::vector<std::string> argmax_codes;
  std::vector<std::string> expected_codes;
  bool pass = false;
  // Edge lists of trees that break the check, and free-form notes.
  std::vector<std::string> offending;
  std::string note;
};

struct BatteryReport {
  int n_max = 0;
  std::vector<CheckRow> rows;
  double elapsed_seconds = 0;

  bool all_pass() const;
  int failures() const;
};

// Names accepted in BatteryConfig::theorems.
const std::vector<std::string>& TheoremNames();

// Throws Error(kInvalidArgument) for unknown theorem names and
// Error(kOrderTooLarge) when n_max exceeds config.max_order. Check failures
// are report content.
BatteryReport RunTheoremBattery(int n_max, const BatteryConfig& config = {});

nlohmann::json ToJson(const BatteryReport& report, bool include_meta);
std::string ToCsv(const BatteryReport& report);

// Trees obtained by attaching one leaf to every vertex of a tree of order m.
std::vector<Tree> Coronas(int m);

}  // namespace treematch

#endif  // TREEMATCH_EXTREMAL_H_
