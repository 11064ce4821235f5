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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.h"
#include "treematch/bounds.h"
#include "treematch/extremal.h"
#include "treematch/family.h"
#include "treematch/hosoya.h"
#include "treematch/matching.h"
#include "treematch/spideropt.h"
#include "treematch/treegen.h"

namespace treematch {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failure messages for one criterion.
class Criterion {
 public:
  explicit Criterion(std::string name) : name_(std::move(name)) {}

  void Expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void Note(const std::string& note) { notes_.push_back(note); }

  bool Report() const {
    const bool pass = failed_ == 0;
    std::printf("%s %s (%d checks", pass ? "PASS" : "FAIL", name_.c_str(),
                checks_);
    for (const auto& n : notes_) std::printf("; %s", n.c_str());
    std::printf(")\n");
    for (const auto& f : failures_) std::printf("    %s\n", f.c_str());
    if (failed_ > static_cast<int>(failures_.size())) {
      std::printf("    ... %d more\n", failed_ - static_cast<int>(failures_.size()));
    }
    std::fflush(stdout);
    return pass;
  }

 private:
  std::string name_;
  int checks_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::set<CanonicalCode> CodeSet(const std::vector<Tree>& trees) {
  std::set<CanonicalCode> out;
  for (const Tree& t : trees) out.insert(Canonicalize(t));
  return out;
}

std::set<CanonicalCode> ArgSet(const ScanReport& r) {
  return {r.argmax.begin(), r.argmax.end()};
}

std::vector<Tree> AllOfOrder(int n) {
  std::vector<Tree> out;
  TreeStream s(n);
  while (auto t = s.Next()) out.push_back(std::move(*t));
  return out;
}

bool IsInteger(const ScanReport& r, const BigInt& v) {
  return Compare(r.value, StatValue(v)) == 0;
}

std::string At(int n) { return "n=" + std::to_string(n); }

// Scan of n with the statistic; checks value and the exact argmax set.
void ExpectScan(Criterion& c, int n, const std::string& selector,
                Objective objective, const BigInt& value,
                const std::vector<Tree>& argmax) {
  ScanReport r = Scan(n, MakeStatistic(selector), objective);
  c.Expect(IsInteger(r, value), selector + " " + At(n) + ": value " +
                                    ToString(r.value) + ", want " +
                                    ToString(value));
  c.Expect(ArgSet(r) == CodeSet(argmax),
           selector + " " + At(n) + ": " + std::to_string(r.argmax.size()) +
               " extremal trees, want " + std::to_string(argmax.size()));
}

bool OracleEquivalence() {
  Criterion c("1 oracle equivalence, all trees n <= 10");
  auto start = Clock::now();
  std::int64_t trees = 0;
  for (int n = 1; n <= 10; ++n) {
    TreeStream s(n);
    while (auto t = s.Next()) {
      ++trees;
      oracle::BruteCounts b = oracle::Count(*t, 3);
      MatchingProfile p = ComputeMatchingProfile(*t);
      p.resize(b.profile.size(), 0);
      const std::string where = At(n) + " " + t->ToEdgeList();
      c.Expect(p == b.profile, "profile " + where);
      c.Expect(CountApm(*t) == b.apm, "apm " + where);
      c.Expect(CountMaximalMatchings(*t) == b.maximal, "maximal " + where);
      if (n >= 2) {
        for (int k = 1; k <= 3; ++k) {
          c.Expect(CountKSapm(*t, k) == b.ksapm[k],
                   "ksapm k=" + std::to_string(k) + " " + where);
        }
      }
    }
  }
  const double secs = Seconds(start);
  c.Expect(secs < 60, "took " + std::to_string(secs) + " s");
  c.Note(std::to_string(trees) + " trees, " + std::to_string(secs).substr(0, 5) + " s");
  return c.Report();
}

bool OddApm() {
  Criterion c("2 odd-order APM maximum and subdivision argmax, n = 5..15");
  auto start = Clock::now();
  for (int n = 5; n <= 15; n += 2) {
    std::vector<Tree> expected;
    for (const Tree& base : AllOfOrder((n + 1) / 2)) {
      expected.push_back(OneSubdivision(base));
    }
    ExpectScan(c, n, "apm", Objective::kMax, (n + 1) / 2, expected);
  }
  const double secs = Seconds(start);
  c.Expect(secs < 300, "took " + std::to_string(secs) + " s");
  return c.Report();
}

bool EvenApm() {
  Criterion c("3 even-order APM maximum n(n+2)/8, n = 4..16");
  for (int n = 4; n <= 16; n += 2) {
    std::vector<Tree> expected = {MakePath(n)};
    if (n == 4) expected.push_back(MakeStar(4));
    ExpectScan(c, n, "apm", Objective::kMax, n * (n + 2) / 8, expected);
  }
  return c.Report();
}

bool MaxMk() {
  Criterion c("4 maximum m_k = C(n-k,k) with unique path, k = 2..4, n <= 16");
  for (int k = 2; k <= 4; ++k) {
    for (int n = 2 * k + 2; n <= 16; ++n) {
      ExpectScan(c, n, "mk:" + std::to_string(k), Objective::kMax,
                 Binomial(n - k, k), {MakePath(n)});
    }
  }
  return c.Report();
}

bool SapmScans() {
  Criterion c("5 SAPM maxima: odd spiders, perfect-matching regimes, f(n) table");
  auto start = Clock::now();
  ExpectScan(c, 5, "sapm", Objective::kMax, 2,
             {MakePath(5), MakeDoubleBroom(1, 2)});
  for (int n = 7; n <= 15; n += 2) {
    ExpectScan(c, n, "sapm", Objective::kMax, (n - 1) / 2, {MakeSpider(n)});
  }
  for (int n = 2; n <= 16; n += 2) {
    BigInt value = std::max({BigInt(1), BigInt((n - 2) / 2),
                             BigInt((n - 2) * (n - 2) / 16)});
    std::vector<Tree> expected;
    if (n <= 10) {
      // Every tree of order n/2 with a pendant leaf on each vertex.
      for (const Tree& base : AllOfOrder(n / 2)) {
        std::vector<Edge> edges = base.edges();
        const int m = base.order();
        for (int v = 0; v < m; ++v) edges.push_back({v, m + v});
        expected.push_back(Tree::FromEdges(2 * m, edges));
      }
    }
    if (n >= 10) expected.push_back(MakeWideSpider(n));
    ExpectScan(c, n, "pm-sapm", Objective::kMax, value, expected);
  }
  for (int n = 6; n <= 16; n += 2) {
    BigInt value = n == 6 ? 4 : n <= 14 ? n - 3 : n * n / 16 - 1;
    FTableEntry f = FTable(n);
    c.Expect(f.value == value, "f table " + At(n));
    std::vector<Tree> expected;
    for (const FamilySpec& spec : f.families) expected.push_back(MakeFamily(spec));
    ExpectScan(c, n, "sapm", Objective::kMax, value, expected);
  }
  const double secs = Seconds(start);
  c.Expect(secs < 600, "took " + std::to_string(secs) + " s");
  return c.Report();
}

Tree BalancedTrio(int n) {
  const int legs = (n - 4) / 2;
  const int a = (legs + 2) / 3, b = (legs + 1) / 3, cc = legs / 3;
  return MakeSpiderTrio(a, b, cc);
}

bool LargeSapm() {
  Criterion c("6 SAPM counts of trios, n = 28 and even n = 30..60");
  const BigInt want28 = 24 * 24 / 12;
  c.Expect(CountSapm(MakeSpiderTrio(6, 6, 0)) == want28, "st:6,6,0");
  c.Expect(CountSapm(MakeSpiderTrio(4, 4, 4)) == want28, "st:4,4,4");
  c.Expect(want28 == 48, "floor(24^2/12) = 48");
  for (int n = 30; n <= 60; n += 2) {
    Tree t = BalancedTrio(n);
    BigInt got = CountSapm(t);
    BigInt want = (n - 4) * (n - 4) / 12;
    c.Expect(t.order() == n && got == want,
             At(n) + ": " + ToString(got) + ", want " + ToString(want));
  }
  return c.Report();
}

bool MinMaximal() {
  Criterion c("7 minimum maximal matchings ceil(n/2), n <= 16; degree sums n <= 12");
  for (int n = 3; n <= 16; ++n) {
    std::vector<Tree> expected = {MakeSpider(n)};
    if (n % 2 == 1 && n >= 5) expected.push_back(MakeSpecialSpider(n));
    ExpectScan(c, n, "maximal", Objective::kMin, (n + 1) / 2, expected);
  }
  BatteryConfig config;
  config.theorems = {"degree-sum"};
  config.oracle_max_order = 12;
  BatteryReport report = RunTheoremBattery(12, config);
  for (const CheckRow& row : report.rows) {
    c.Expect(row.pass, "degree-sum " + At(row.n) + ": " + row.observed);
  }
  c.Expect(report.rows.size() == 11, "degree-sum rows for n = 2..12");
  return c.Report();
}

bool StarMinimum() {
  Criterion c("8 star minimizes Z_phi for phi1..phi4, n <= 10, c grid");
  const std::vector<Rational> grid = {Rational(1, 10), Rational(1, 2), 1, 2, 5};
  const WeightKind kinds[] = {WeightKind::kExpSum, WeightKind::kExpProd,
                              WeightKind::kPowSum, WeightKind::kPowProd};
  const Real tolerance("1e-9");
  for (int n = 2; n <= 10; ++n) {
    const Tree star = MakeStar(n);
    const CanonicalCode star_code = Canonicalize(star);
    std::vector<Tree> trees = AllOfOrder(n);
    for (WeightKind kind : kinds) {
      for (const Rational& cv : grid) {
        HosoyaValue s = WeightedHosoyaNumeric(star, kind, cv);
        if (kind == WeightKind::kExpSum) {
          Rational closed = 1;
          for (int i = 0; i < n; ++i) closed *= cv;
          closed = closed * (n - 1) + 1;
          c.Expect(std::get<Rational>(s) == closed,
                   "closed form " + At(n) + " c=" + ToString(cv));
        }
        for (const Tree& t : trees) {
          const bool is_star = Canonicalize(t) == star_code;
          HosoyaValue v = WeightedHosoyaNumeric(t, kind, cv);
          const std::string where = ToString(WeightFamily::Of(kind, cv)) +
                                    " " + t.ToEdgeList();
          if (kind == WeightKind::kExpSum || kind == WeightKind::kExpProd) {
            const Rational& a = std::get<Rational>(v);
            const Rational& b = std::get<Rational>(s);
            c.Expect(is_star ? a == b : a > b, where);
          } else {
            Real a = ToReal(v), b = ToReal(s);
            Real gap = (a - b) / b;
            c.Expect(is_star ? abs(gap) <= tolerance : gap > tolerance, where);
          }
        }
      }
    }
  }
  return c.Report();
}

bool LargeCMaximizers() {
  Criterion c("9 large-c unique maximizers by symbolic comparison, n <= 14");
  for (int n = 4; n <= 14; ++n) {
    std::vector<std::pair<std::string, Tree>> cases;
    if (n % 2 == 0 && n >= 12) cases.push_back({"phi1", MakeWideSpider(n)});
    if (n % 2 == 1 && n >= 7) cases.push_back({"phi1", MakeSpider(n)});
    if (n >= 6) cases.push_back({"phi2", MakeBalancedDoubleBroom(n)});
    cases.push_back({"phi3", MakePath(n)});
    cases.push_back({"phi4", MakePath(n)});
    for (const auto& [selector, tree] : cases) {
      Statistic stat = MakeStatistic(selector);
      ScanReport r = Scan(n, stat, Objective::kMax);
      c.Expect(r.argmax.size() == 1 && r.argmax[0] == Canonicalize(tree),
               selector + " " + At(n) + ": " + std::to_string(r.argmax.size()) +
                   " maximizers");
      c.Expect(std::holds_alternative<SymbolicIndex>(r.value),
               selector + " " + At(n) + " is not symbolic");
    }
  }
  return c.Report();
}

bool ChainOptimum() {
  Criterion c("10 chain optimum ratio (27/16, 1, 9/16, 3/4) and polynomial");
  auto start = Clock::now();
  OptimizeOptions options;
  options.m = 8;
  options.k = 4;
  options.symmetric = true;
  OptimizeResult r = OptimizeLeafDistribution(options);
  const double expected[] = {27.0 / 16, 1.0, 9.0 / 16, 3.0 / 4};
  c.Expect(r.ratio.size() == 4, "ratio length");
  std::ostringstream ratio;
  for (std::size_t i = 0; i < r.ratio.size() && i < 4; ++i) {
    const double rel = std::abs(r.ratio[i] - expected[i]) / expected[i];
    c.Expect(rel <= 1e-6, "coordinate " + std::to_string(i) + " relative error " +
                              std::to_string(rel));
    ratio << (i ? " " : "") << r.ratio[i];
  }
  c.Expect(r.finite_difference_error <= 1e-6,
           "finite-difference gap " + std::to_string(r.finite_difference_error));

  // Coefficients of (b^2 + (2c + 2d)b + d^2)a^2 + 2c((c + 2d)b + d^2)a + c^2 d^2.
  Polynomial p = ChainPolynomial(8, 4, MirroredIndex(8));
  std::map<Polynomial::Monomial, BigInt> want = {
      {{2, 2, 0, 0}, 1}, {{2, 1, 1, 0}, 2}, {{2, 1, 0, 1}, 2},
      {{2, 0, 0, 2}, 1}, {{1, 1, 2, 0}, 2}, {{1, 1, 1, 1}, 4},
      {{1, 0, 1, 2}, 2}, {{0, 0, 2, 2}, 1}};
  c.Expect(p.terms() == want, "polynomial " + p.ToString());
  const double secs = Seconds(start);
  c.Expect(secs < 60, "took " + std::to_string(secs) + " s");
  c.Note("ratio " + ratio.str());
  return c.Report();
}

bool GoldenFloor() {
  Criterion c("11 golden16 weights: paths, sparse construction, n = 12 scan");
  for (int n = 1; n <= 30; ++n) {
    c.Expect(WeightedHosoyaGolden(MakePath(n)) == GoldenNumber(HosoyaIndex(MakePath(n))),
             "path " + At(n));
  }
  for (int h = 2; h <= 8; ++h) {
    SymbolicIndex z =
        WeightedHosoyaSymbolic(MakeGoldenSparse(h), WeightFamily::GoldenFloor());
    bool all_zero = true;
    for (const auto& [descriptor, count] : z.terms()) all_zero &= descriptor == 0;
    c.Expect(all_zero, "sparse h=" + std::to_string(h) + ": " + z.ToString("phi"));
  }
  Statistic stat = MakeStatistic("golden16");
  const CanonicalCode path = Canonicalize(MakePath(12));
  const CanonicalCode star = Canonicalize(MakeStar(12));
  for (Objective obj : {Objective::kMax, Objective::kMin}) {
    ScanReport r = Scan(12, stat, obj);
    const std::string label = std::string(ToString(obj)) + " " + ToString(r.value);
    c.Expect(!ArgSet(r).count(path), "path:12 attains the " + label);
    c.Expect(!ArgSet(r).count(star), "star:12 attains the " + label);
  }
  return c.Report();
}

bool Performance() {
  Criterion c("12 performance envelope and parallel determinism");
  auto start = Clock::now();
  BatteryReport battery = RunTheoremBattery(10);
  const double battery_secs = Seconds(start);
  c.Expect(battery_secs < 120, "battery n_max=10 took " + std::to_string(battery_secs) + " s");
  c.Expect(battery.all_pass(), "battery n_max=10 has " +
                                   std::to_string(battery.failures()) + " failures");

  Statistic stat = MakeStatistic("sapm");
  start = Clock::now();
  ScanReport parallel = Scan(18, stat, Objective::kMax, {4, kDefaultMaxOrder});
  const double scan_secs = Seconds(start);
  c.Expect(parallel.classes_scanned == 123867,
           "scanned " + std::to_string(parallel.classes_scanned));
  c.Expect(scan_secs < 600, "scan n=18 took " + std::to_string(scan_secs) + " s");
  ScanReport serial = Scan(18, stat, Objective::kMax, {1, kDefaultMaxOrder});
  c.Expect(ToJson(serial, false).dump() == ToJson(parallel, false).dump(),
           "serial and parallel n=18 reports differ");
  for (const char* selector : {"phi1", "golden16", "maximal"}) {
    Statistic s = MakeStatistic(selector);
    c.Expect(ToJson(Scan(13, s, Objective::kMin, {1, kDefaultMaxOrder}), false) ==
                 ToJson(Scan(13, s, Objective::kMin, {4, kDefaultMaxOrder}), false),
             std::string("serial and parallel differ for ") + selector);
  }
  c.Note("battery " + std::to_string(battery_secs).substr(0, 5) + " s, scan n=18 " +
         std::to_string(scan_secs).substr(0, 6) + " s");
  return c.Report();
}

}  // namespace
}  // namespace treematch

int main() {
  using namespace treematch;
  const std::function<bool()> criteria[] = {
      OracleEquivalence, OddApm,       EvenApm,          MaxMk,
      SapmScans,         LargeSapm,    MinMaximal,       StarMinimum,
      LargeCMaximizers,  ChainOptimum, GoldenFloor,      Performance};
  int failed = 0;
  for (const auto& criterion : criteria) {
    try {
      if (!criterion()) ++failed;
    } catch (const std::exception& e) {
      std::printf("FAIL (exception: %s)\n", e.what());
      ++failed;
    }
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
