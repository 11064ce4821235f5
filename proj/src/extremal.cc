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

#include "treematch/extremal.h"

#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "treematch/bounds.h"
#include "treematch/family.h"
#include "treematch/matching.h"

namespace treematch {
namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int Group(const StatValue& v) {
  if (std::holds_alternative<SymbolicIndex>(v)) return 1;
  if (std::holds_alternative<GoldenNumber>(v)) return 2;
  return 0;
}

Rational ExactOf(const StatValue& v) {
  if (const BigInt* i = std::get_if<BigInt>(&v)) return Rational(*i);
  return std::get<Rational>(v);
}

Real RealOf(const StatValue& v) {
  if (const Real* r = std::get_if<Real>(&v)) return *r;
  return ToReal(HosoyaValue(ExactOf(v)));
}

template <typename T>
std::strong_ordering Order(const T& a, const T& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// Best value and its trees over one part of the enumeration.
struct Partial {
  std::optional<StatValue> value;
  std::map<CanonicalCode, Tree> trees;
  std::int64_t scanned = 0;
  std::int64_t in_domain = 0;
};

bool Better(const StatValue& candidate, const StatValue& incumbent,
            Objective objective) {
  auto order = Compare(candidate, incumbent);
  return objective == Objective::kMax ? order > 0 : order < 0;
}

void Offer(Partial& part, StatValue value, const Tree& tree,
           Objective objective) {
  if (!part.value || Better(value, *part.value, objective)) {
    part.value = std::move(value);
    part.trees.clear();
    part.trees.emplace(Canonicalize(tree), tree);
  } else if (Compare(value, *part.value) == 0) {
    part.trees.emplace(Canonicalize(tree), tree);
  }
}

std::vector<Tree> AllTrees(int n, int max_order) {
  std::vector<Tree> trees;
  TreeStream stream(n, max_order);
  while (auto t = stream.Next()) trees.push_back(std::move(*t));
  return trees;
}

// ---------------------------------------------------------------------------
// Battery plumbing.

struct Context {
  const BatteryConfig& config;
  BatteryReport& report;
  ScanOptions scan_options;
};

std::set<CanonicalCode> CodesOf(const std::vector<Tree>& trees) {
  std::set<CanonicalCode> codes;
  for (const Tree& t : trees) codes.insert(Canonicalize(t));
  return codes;
}

std::vector<std::string> Strings(const std::set<CanonicalCode>& codes) {
  std::vector<std::string> out;
  for (const auto& c : codes) out.push_back(c.str());
  return out;
}

std::string Joined(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ", ";
    out += p;
  }
  return out;
}

std::string Label(const FamilySpec& spec) { return ToString(spec); }

// A scan compared against a closed-form value and an expected argmax set.
// An empty expected_trees skips the set comparison.
CheckRow ScanCheck(Context& ctx, const std::string& theorem, int n,
                   const std::string& selector, Objective objective,
                   const StatValue& expected_value,
                   const std::vector<Tree>& expected_trees,
                   const std::string& expected_label) {
  CheckRow row;
  row.theorem = theorem;
  row.n = n;
  ScanReport scan =
      Scan(n, MakeStatistic(selector), objective, ctx.scan_options);
  std::set<CanonicalCode> expected = CodesOf(expected_trees);
  std::set<CanonicalCode> observed(scan.argmax.begin(), scan.argmax.end());
  row.expected = std::string(ToString(objective)) + " " + selector + " = " +
                 ToString(expected_value);
  if (!expected_label.empty()) row.expected += "; argmax {" + expected_label + "}";
  row.observed = std::string(ToString(objective)) + " " + selector + " = " +
                 ToString(scan.value) + " over " +
                 std::to_string(scan.classes_in_domain) + " classes; " +
                 std::to_string(observed.size()) + " extremal";
  row.argmax_codes = Strings(observed);
  row.expected_codes = Strings(expected);
  bool value_ok = Compare(scan.value, expected_value) == 0;
  bool set_ok = expected_trees.empty() || observed == expected;
  row.pass = value_ok && set_ok;
  if (!set_ok) {
    for (std::size_t i = 0; i < scan.argmax.size(); ++i) {
      if (!expected.count(scan.argmax[i])) {
        row.offending.push_back("unexpected extremal: " +
                                scan.argmax_trees[i].ToEdgeList());
      }
    }
    for (const Tree& t : expected_trees) {
      if (!observed.count(Canonicalize(t))) {
        row.offending.push_back("expected but not extremal: " +
                                t.ToEdgeList());
      }
    }
  }
  return row;
}

bool Selected(const BatteryConfig& config, const std::string& name) {
  return config.theorems.empty() ||
         std::find(config.theorems.begin(), config.theorems.end(), name) !=
             config.theorems.end();
}

bool HasSiblingLeaves(const Tree& t) {
  std::vector<int> leaf_children(t.order(), 0);
  for (int v : t.leaves()) {
    if (t.order() <= 2) return false;
    if (++leaf_children[t.neighbors(v)[0]] >= 2) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Individual checks.

void OddApm(Context& ctx, int n_max) {
  for (int n = 3; n <= n_max; n += 2) {
    std::vector<Tree> expected;
    for (const Tree& base : AllTrees((n + 1) / 2, ctx.config.max_order)) {
      expected.push_back(OneSubdivision(base));
    }
    ctx.report.rows.push_back(ScanCheck(
        ctx, "odd-apm", n, "apm", Objective::kMax, OddApmMax(n), expected,
        "1-subdivisions of all " + std::to_string(expected.size()) +
            " trees of order " + std::to_string((n + 1) / 2)));
  }
}

void EvenApm(Context& ctx, int n_max) {
  for (int n = 2; n <= n_max; n += 2) {
    std::vector<Tree> expected = {MakePath(n)};
    std::string label = "path:" + std::to_string(n);
    if (n == 4) {
      expected.push_back(MakeStar(4));
      label += ", star:4";
    }
    ctx.report.rows.push_back(ScanCheck(ctx, "even-apm", n, "apm",
                                        Objective::kMax, EvenApmMax(n),
                                        expected, label));
  }
}

void MaxMk(Context& ctx, int n_max) {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 2 * k + 2; n <= n_max; ++n) {
      CheckRow row = ScanCheck(ctx, "max-mk", n, "mk:" + std::to_string(k),
                               Objective::kMax, MatchingsOfSizeMax(n, k),
                               {MakePath(n)}, "path:" + std::to_string(n));
      row.note = "k=" + std::to_string(k);
      ctx.report.rows.push_back(std::move(row));
    }
  }
}

void SiblingApm(Context& ctx, int n_max) {
  for (int n = 4; n <= n_max; n += 2) {
    CheckRow row;
    row.theorem = "sibling-apm";
    row.n = n;
    row.expected = "apm <= " + std::to_string(n - 1) +
                   " when two leaves share a neighbor; equality exactly for a "
                   "1-subdivision with one leaf doubled";
    // Equality trees: subdivide a tree of order n/2, then give one leaf a twin.
    std::set<CanonicalCode> expected;
    for (const Tree& base : AllTrees(n / 2, ctx.config.max_order)) {
      Tree s = OneSubdivision(base);
      for (int leaf : s.leaves()) {
        std::vector<Edge> edges = s.edges();
        edges.push_back({s.neighbors(leaf)[0], s.order()});
        expected.insert(Canonicalize(Tree::FromEdges(s.order() + 1, edges)));
      }
    }
    BigInt worst = 0;
    std::set<CanonicalCode> attaining;
    std::int64_t considered = 0;
    bool bound_ok = true;
    for (const Tree& t : AllTrees(n, ctx.config.max_order)) {
      if (!HasSiblingLeaves(t)) continue;
      ++considered;
      BigInt apm = CountApm(t);
      worst = std::max(worst, apm);
      if (apm > n - 1) {
        bound_ok = false;
        row.offending.push_back(t.ToEdgeList());
      }
      if (apm == n - 1) attaining.insert(Canonicalize(t));
    }
    row.observed = "max apm = " + ToString(worst) + " over " +
                   std::to_string(considered) + " classes";
    row.argmax_codes = Strings(attaining);
    row.expected_codes = Strings(expected);
    row.pass = bound_ok && attaining == expected;
    ctx.report.rows.push_back(std::move(row));
  }
}

void M2Identity(Context& ctx, int n_max) {
  for (int n = 2; n <= n_max; ++n) {
    CheckRow row;
    row.theorem = "m2-identity";
    row.n = n;
    row.expected = "m_2 = C(n-1,2) - sum C(deg,2) for every tree";
    std::int64_t count = 0;
    for (const Tree& t : AllTrees(n, ctx.config.max_order)) {
      ++count;
      BigInt expected = Binomial(n - 1, 2);
      for (int d : t.degrees()) expected -= Binomial(d, 2);
      MatchingProfile p = ComputeMatchingProfile(t);
      BigInt m2 = p.size() > 2 ? p[2] : BigInt(0);
      if (m2 != expected) row.offending.push_back(t.ToEdgeList());
    }
    row.pass = row.offending.empty();
    row.observed = std::to_string(count - row.offending.size()) + " of " +
                   std::to_string(count) + " classes agree";
    ctx.report.rows.push_back(std::move(row));
  }
}

void OddSapm(Context& ctx, int n_max) {
  for (int n = 5; n <= n_max; n += 2) {
    std::vector<Tree> expected;
    std::string label;
    if (n == 5) {
      expected = {MakePath(5), MakeDoubleBroom(1, 2)};
      label = "path:5, db:1,2";
    } else {
      expected = {MakeSpider(n)};
      label = "spider:" + std::to_string(n);
    }
    ctx.report.rows.push_back(ScanCheck(ctx, "odd-sapm", n, "sapm",
                                        Objective::kMax, OddSapmMax(n),
                                        expected, label));
  }
}

void PerfectSapm(Context& ctx, int n_max) {
  for (int n = 2; n <= n_max; n += 2) {
    std::vector<Tree> expected;
    std::string label;
    if (n <= 10) {
      expected = Coronas(n / 2);
      label = "a leaf on every vertex of each tree of order " +
              std::to_string(n / 2);
    }
    if (n >= 10) {
      expected.push_back(MakeWideSpider(n));
      label += std::string(label.empty() ? "" : ", ") + "wide:" +
               std::to_string(n);
    }
    CheckRow row = ScanCheck(ctx, "pm-sapm", n, "pm-sapm", Objective::kMax,
                             PerfectSapmMax(n), expected, label);
    row.note = "trees with a perfect matching";
    ctx.report.rows.push_back(std::move(row));
  }
}

void SapmF(Context& ctx, int n_max) {
  for (int n = 2; n <= n_max; n += 2) {
    FTableEntry f = FTable(n);
    std::vector<Tree> expected;
    std::vector<std::string> labels;
    for (const FamilySpec& spec : f.families) {
      expected.push_back(MakeFamily(spec));
      labels.push_back(Label(spec));
    }
    ctx.report.rows.push_back(ScanCheck(ctx, "sapm-f", n, "sapm",
                                        Objective::kMax, f.value, expected,
                                        Joined(labels)));
  }
}

void MinMaximal(Context& ctx, int n_max) {
  for (int n = 3; n <= n_max; ++n) {
    std::vector<Tree> expected = {MakeSpider(n)};
    std::string label = "spider:" + std::to_string(n);
    if (n % 2 == 1 && n >= 5) {
      expected.push_back(MakeSpecialSpider(n));
      label += ", sss:" + std::to_string(n);
    }
    ctx.report.rows.push_back(ScanCheck(ctx, "min-maximal", n, "maximal",
                                        Objective::kMin,
                                        MinMaximalMatchings(n), expected,
                                        label));
  }
}

void DegreeSum(Context& ctx, int n_max) {
  const int top = std::min(n_max, ctx.config.oracle_max_order);
  for (int n = 2; n <= top; ++n) {
    CheckRow row;
    row.theorem = "degree-sum";
    row.n = n;
    row.expected = "every maximal matching has degree sum >= " +
                   std::to_string(n) +
                   "; equality only for a star, or diameter 3 with the "
                   "central edge";
    int smallest = -1;
    std::int64_t equal_cases = 0;
    for (const Tree& t : AllTrees(n, ctx.config.max_order)) {
      const DiameterPath diameter = Diameter(t);
      const bool star = diameter.length <= 2;
      std::vector<Matching> maximal = MaximalMatchings(t);
      std::vector<int> sums = MaximalMatchingDegreeSums(t);
      for (std::size_t i = 0; i < sums.size(); ++i) {
        if (smallest < 0 || sums[i] < smallest) smallest = sums[i];
        bool bad = sums[i] < n;
        if (sums[i] == n) {
          ++equal_cases;
          bool central = false;
          if (diameter.length == 3 && maximal[i].size() == 1) {
            int a = diameter.path[1], b = diameter.path[2];
            const Edge& e = maximal[i][0];
            central = (e.u == std::min(a, b) && e.v == std::max(a, b));
          }
          bad = !star && !central;
        }
        if (bad) {
          row.offending.push_back(t.ToEdgeList());
          break;
        }
      }
    }
    row.observed = "smallest degree sum " + std::to_string(smallest) + "; " +
                   std::to_string(equal_cases) + " equality cases";
    row.pass = row.offending.empty();
    ctx.report.rows.push_back(std::move(row));
  }
}

void StarMin(Context& ctx, int n_max) {
  const int top = std::min(n_max, ctx.config.numeric_max_order);
  const std::vector<Rational> grid = {Rational(1, 10), Rational(1, 2), 1, 2,
                                      5};
  const WeightKind kinds[] = {WeightKind::kExpSum, WeightKind::kExpProd,
                              WeightKind::kPowSum, WeightKind::kPowProd};
  const Real tolerance("1e-9");
  for (int n = 2; n <= top; ++n) {
    CheckRow row;
    row.theorem = "star-min";
    row.n = n;
    row.expected =
        "Z_phi(T) >= Z_phi(S_n), equal only for S_n, phi1..phi4 at c in "
        "{0.1, 0.5, 1, 2, 5}; Z_phi1(S_n) = (n-1)c^n + 1";
    const Tree star = MakeStar(n);
    const CanonicalCode star_code = Canonicalize(star);
    std::vector<Tree> trees = AllTrees(n, ctx.config.max_order);
    int comparisons = 0;
    for (WeightKind kind : kinds) {
      for (const Rational& c : grid) {
        HosoyaValue star_value = WeightedHosoyaNumeric(star, kind, c);
        if (kind == WeightKind::kExpSum) {
          Rational closed = Rational(n - 1);
          for (int i = 0; i < n; ++i) closed *= c;
          closed += 1;
          if (std::get<Rational>(star_value) != closed) {
            row.offending.push_back("closed form mismatch at c=" +
                                    ToString(c));
          }
        }
        for (const Tree& t : trees) {
          ++comparisons;
          const bool is_star = Canonicalize(t) == star_code;
          HosoyaValue value = WeightedHosoyaNumeric(t, kind, c);
          bool ok;
          if (std::holds_alternative<Rational>(value) &&
              std::holds_alternative<Rational>(star_value)) {
            const Rational& a = std::get<Rational>(value);
            const Rational& b = std::get<Rational>(star_value);
            ok = is_star ? a == b : a > b;
          } else {
            Real a = ToReal(value), b = ToReal(star_value);
            Real gap = (a - b) / b;
            ok = is_star ? abs(gap) <= tolerance : gap > tolerance;
          }
          if (!ok) {
            row.offending.push_back(ToString(WeightFamily::Of(kind, c)) +
                                    ": " + t.ToEdgeList());
          }
        }
      }
    }
    row.observed = std::to_string(comparisons) + " comparisons, " +
                   std::to_string(row.offending.size()) + " violations";
    row.pass = row.offending.empty();
    ctx.report.rows.push_back(std::move(row));
  }
}

void LargeCMax(Context& ctx, int n_max) {
  const int top = std::min(n_max, ctx.config.symbolic_max_order);
  for (int n = 4; n <= top; ++n) {
    struct Case {
      std::string selector;
      Tree tree;
      std::string label;
    };
    std::vector<Case> cases;
    if (n % 2 == 0 && n >= 12) {
      cases.push_back({"phi1", MakeWideSpider(n), "wide:" + std::to_string(n)});
    }
    if (n % 2 == 1 && n >= 7) {
      cases.push_back({"phi1", MakeSpider(n), "spider:" + std::to_string(n)});
    }
    if (n >= 6) {
      cases.push_back({"phi2", MakeBalancedDoubleBroom(n),
                       "bdb:" + std::to_string(n)});
    }
    cases.push_back({"phi3", MakePath(n), "path:" + std::to_string(n)});
    cases.push_back({"phi4", MakePath(n), "path:" + std::to_string(n)});
    for (const Case& c : cases) {
      Statistic stat = MakeStatistic(c.selector);
      CheckRow row = ScanCheck(ctx, "large-c-max", n, c.selector,
                               Objective::kMax, stat.evaluate(c.tree),
                               {c.tree}, c.label);
      row.note = "symbolic order as c grows";
      ctx.report.rows.push_back(std::move(row));
    }
  }
}

void HosoyaClaims(Context& ctx, int n_max) {
  const int top = std::min(n_max, ctx.config.oracle_max_order);
  for (int n = 4; n <= top; ++n) {
    CheckRow row;
    row.theorem = "hosoya-claims";
    row.n = n;
    const BigInt sum_bound = DegreeProductSumBound(n);
    const BigInt prod_bound = DegreeSumProductBound(n);
    const BigInt degree_bound = AllDegreeProductBound(n);
    row.expected =
        "per matching: sum deg*deg <= " + ToString(sum_bound) +
        (n >= 6 ? " (equal only for bdb central edge)" : " (not claimed)") +
        "; prod (deg+deg) <= " + ToString(prod_bound) +
        " (equal only for perfect/strong almost-perfect" +
        (n % 2 == 0 ? "; others <= half" : "") +
        "); prod of all degrees <= " + ToString(degree_bound) +
        " (equal only for the path)";
    const CanonicalCode bdb =
        n >= 4 ? Canonicalize(MakeBalancedDoubleBroom(n)) : CanonicalCode();
    const CanonicalCode path = Canonicalize(MakePath(n));
    BigInt max_sum = 0, max_prod = 0, max_degrees = 0;
    for (const Tree& t : AllTrees(n, ctx.config.max_order)) {
      const CanonicalCode code = Canonicalize(t);
      bool bad = false;
      BigInt degrees = 1;
      for (int d : t.degrees()) degrees *= d;
      max_degrees = std::max(max_degrees, degrees);
      if (degrees > degree_bound || (degrees == degree_bound) != (code == path)) {
        bad = true;
      }
      const std::vector<int> leaves = t.leaves();
      for (const Matching& m : BruteMatchings(t)) {
        BigInt sum = 0, prod = 1;
        std::vector<char> covered(n, 0);
        for (const Edge& e : m) {
          sum += t.degree(e.u) * t.degree(e.v);
          prod *= t.degree(e.u) + t.degree(e.v);
          covered[e.u] = covered[e.v] = 1;
        }
        max_sum = std::max(max_sum, sum);
        max_prod = std::max(max_prod, prod);
        if (n >= 6) {
          if (sum > sum_bound) bad = true;
          if (sum == sum_bound) {
            // Central edge of the balanced double broom joins its two
            // highest-degree vertices.
            bool central = code == bdb && m.size() == 1 &&
                           t.degree(m[0].u) > 1 && t.degree(m[0].v) > 1;
            if (!central) bad = true;
          }
        }
        if (prod > prod_bound) bad = true;
        const int uncovered = n - 2 * static_cast<int>(m.size());
        bool extremal_shape;
        if (n % 2 == 0) {
          extremal_shape = uncovered == 0;
        } else {
          extremal_shape = false;
          if (uncovered == 1) {
            for (int v : leaves) extremal_shape |= !covered[v];
          }
        }
        if (prod == prod_bound && !extremal_shape) bad = true;
        if (n % 2 == 0 && !extremal_shape && 2 * prod > prod_bound) bad = true;
      }
      if (bad) row.offending.push_back(t.ToEdgeList());
    }
    row.observed = "max sum " + ToString(max_sum) + ", max product " +
                   ToString(max_prod) + ", max degree product " +
                   ToString(max_degrees);
    row.pass = row.offending.empty();
    ctx.report.rows.push_back(std::move(row));
  }
}

void GoldenNotExtremal(Context& ctx, int n_max) {
  for (int n : {12, 17}) {
    if (n > n_max) continue;
    CheckRow row;
    row.theorem = "golden-not-extremal";
    row.n = n;
    row.expected =
        "neither path:" + std::to_string(n) + " nor star:" + std::to_string(n) +
        " attains the golden16 maximum or minimum";
    Statistic stat = MakeStatistic("golden16");
    ScanReport max = Scan(n, stat, Objective::kMax, ctx.scan_options);
    ScanReport min = Scan(n, stat, Objective::kMin, ctx.scan_options);
    const CanonicalCode path = Canonicalize(MakePath(n));
    const CanonicalCode star = Canonicalize(MakeStar(n));
    auto contains = [](const ScanReport& r, const CanonicalCode& c) {
      return std::binary_search(r.argmax.begin(), r.argmax.end(), c);
    };
    std::vector<std::string> hits;
    if (contains(max, path)) hits.push_back("path is a maximizer");
    if (contains(max, star)) hits.push_back("star is a maximizer");
    if (contains(min, path)) hits.push_back("path is a minimizer");
    if (contains(min, star)) hits.push_back("star is a minimizer");
    row.observed = "max " + ToString(max.value) + " (" +
                   std::to_string(max.argmax.size()) + " trees), min " +
                   ToString(min.value) + " (" +
                   std::to_string(min.argmax.size()) + " trees)";
    if (!hits.empty()) row.observed += "; " + Joined(hits);
    for (const auto& c : max.argmax) row.argmax_codes.push_back(c.str());
    for (const auto& t : min.argmax_trees) {
      row.offending.push_back("minimizer: " + t.ToEdgeList());
    }
    row.pass = hits.empty();
    if (row.pass) row.offending.clear();
    row.note = "argmax_codes lists the maximizers";
    ctx.report.rows.push_back(std::move(row));
  }
}

void SiblingKsapm(Context& ctx, int n_max) {
  const int top = std::min(n_max, ctx.config.oracle_max_order);
  for (int n = 4; n <= top; ++n) {
    CheckRow row;
    row.theorem = "sibling-ksapm";
    row.n = n;
    row.expected = "k-SAPMs <= 2*C(n,k-1) when two leaves share a neighbor, "
                   "k = 2, 3, 4";
    BigInt worst_ratio_num = 0;
    for (const Tree& t : AllTrees(n, ctx.config.max_order)) {
      if (!HasSiblingLeaves(t)) continue;
      for (int k = 2; k <= 4; ++k) {
        BigInt count = CountKSapm(t, k);
        if (count > 2 * Binomial(n, k - 1)) {
          row.offending.push_back("k=" + std::to_string(k) + ": " +
                                  t.ToEdgeList());
        }
        worst_ratio_num = std::max(worst_ratio_num, count);
      }
    }
    row.observed = "largest count " + ToString(worst_ratio_num);
    row.pass = row.offending.empty();
    ctx.report.rows.push_back(std::move(row));
  }
}

void NlEdgeKsapm(Context& ctx, int n_max) {
  const int top = std::min(n_max, ctx.config.oracle_max_order);
  for (int n = 4; n <= top; ++n) {
    CheckRow row;
    row.theorem = "nl-edge-ksapm";
    row.n = n;
    row.expected = "without sibling leaves, k-SAPMs using an edge between two "
                   "leaf neighbors <= (n-1)*C(n,k-2), k = 2, 3, 4";
    BigInt largest = 0;
    for (const Tree& t : AllTrees(n, ctx.config.max_order)) {
      if (HasSiblingLeaves(t)) continue;
      std::vector<char> near_leaf(n, 0);
      for (int v : t.leaves()) near_leaf[t.neighbors(v)[0]] = 1;
      for (int k = 2; k <= 4; ++k) {
        if (k > n) continue;
        BigInt count = 0;
        for (const StrongMatching& s : ListKSapm(t, k)) {
          for (const Edge& e : s.matching) {
            if (near_leaf[e.u] && near_leaf[e.v]) {
              ++count;
              break;
            }
          }
        }
        largest = std::max(largest, count);
        if (count > (n - 1) * Binomial(n, k - 2)) {
          row.offending.push_back("k=" + std::to_string(k) + ": " +
                                  t.ToEdgeList());
        }
      }
    }
    row.observed = "largest count " + ToString(largest);
    row.pass = row.offending.empty();
    ctx.report.rows.push_back(std::move(row));
  }
}

using CheckFn = void (*)(Context&, int);

const std::vector<std::pair<std::string, CheckFn>>& Checks() {
  static const std::vector<std::pair<std::string, CheckFn>> kChecks = {
      {"odd-apm", OddApm},
      {"even-apm", EvenApm},
      {"max-mk", MaxMk},
      {"sibling-apm", SiblingApm},
      {"m2-identity", M2Identity},
      {"odd-sapm", OddSapm},
      {"pm-sapm", PerfectSapm},
      {"sapm-f", SapmF},
      {"min-maximal", MinMaximal},
      {"degree-sum", DegreeSum},
      {"star-min", StarMin},
      {"large-c-max", LargeCMax},
      {"hosoya-claims", HosoyaClaims},
      {"golden-not-extremal", GoldenNotExtremal},
      {"sibling-ksapm", SiblingKsapm},
      {"nl-edge-ksapm", NlEdgeKsapm},
  };
  return kChecks;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::strong_ordering Compare(const StatValue& a, const StatValue& b) {
  const int ga = Group(a), gb = Group(b);
  if (ga != gb) {
    throw Error(ErrorCode::kMixedKinds, "cannot compare values of different kinds");
  }
  if (ga == 1) {
    return AsymptoticCompare(std::get<SymbolicIndex>(a),
                             std::get<SymbolicIndex>(b));
  }
  if (ga == 2) return std::get<GoldenNumber>(a) <=> std::get<GoldenNumber>(b);
  if (std::holds_alternative<Real>(a) || std::holds_alternative<Real>(b)) {
    return Order(RealOf(a), RealOf(b));
  }
  if (std::holds_alternative<BigInt>(a) && std::holds_alternative<BigInt>(b)) {
    return Order(std::get<BigInt>(a), std::get<BigInt>(b));
  }
  return Order(ExactOf(a), ExactOf(b));
}

std::string ToString(const StatValue& value) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SymbolicIndex> ||
                      std::is_same_v<T, GoldenNumber>) {
          return v.ToString();
        } else {
          return treematch::ToString(v);
        }
      },
      value);
}

nlohmann::json ToJson(const StatValue& value) {
  if (const BigInt* i = std::get_if<BigInt>(&value)) {
    if (*i <= std::numeric_limits<std::int64_t>::max() &&
        *i >= std::numeric_limits<std::int64_t>::min()) {
      return i->convert_to<std::int64_t>();
    }
  }
  return ToString(value);
}

Statistic MakeStatistic(std::string_view selector) {
  const std::string name(selector);
  auto parse_k = [&](std::string_view prefix) {
    std::string rest = name.substr(prefix.size());
    int k = 0;
    std::size_t used = 0;
    try {
      k = std::stoi(rest, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != rest.size() || k < 1) {
      throw Error(ErrorCode::kParseError,
                  "bad statistic '" + name + "': '" + rest +
                      "' is not a positive integer");
    }
    return k;
  };
  Statistic stat;
  stat.name = name;
  if (name == "apm") {
    stat.evaluate = [](const Tree& t) { return StatValue(CountApm(t)); };
  } else if (name == "sapm") {
    stat.evaluate = [](const Tree& t) { return StatValue(CountSapm(t)); };
  } else if (name == "pm-sapm") {
    stat.evaluate = [](const Tree& t) { return StatValue(CountSapm(t)); };
    stat.domain = [](const Tree& t) { return PerfectMatching(t).has_value(); };
  } else if (name.rfind("ksapm:", 0) == 0) {
    int k = parse_k("ksapm:");
    stat.evaluate = [k](const Tree& t) { return StatValue(CountKSapm(t, k)); };
  } else if (name == "maximal") {
    stat.evaluate = [](const Tree& t) {
      return StatValue(CountMaximalMatchings(t));
    };
  } else if (name.rfind("mk:", 0) == 0) {
    int k = parse_k("mk:");
    stat.evaluate = [k](const Tree& t) {
      MatchingProfile p = ComputeMatchingProfile(t);
      return StatValue(k < static_cast<int>(p.size()) ? p[k] : BigInt(0));
    };
  } else if (name == "hosoya") {
    stat.evaluate = [](const Tree& t) { return StatValue(HosoyaIndex(t)); };
  } else if (name == "golden16") {
    stat.evaluate = [](const Tree& t) {
      return StatValue(WeightedHosoyaGolden(t));
    };
  } else if (name.size() == 4 && name.rfind("phi", 0) == 0 &&
             name[3] >= '1' && name[3] <= '4') {
    WeightFamily family = WeightFamily::Parse(name + ":c=1");
    stat.evaluate = [family](const Tree& t) {
      return StatValue(WeightedHosoyaSymbolic(t, family));
    };
  } else if (name.rfind("phi", 0) == 0 || name.rfind("table:", 0) == 0) {
    WeightFamily family = WeightFamily::Parse(name);
    stat.evaluate = [family](const Tree& t) {
      HosoyaValue v = WeightedHosoyaNumeric(t, family);
      if (auto* q = std::get_if<Rational>(&v)) return StatValue(*q);
      return StatValue(std::get<Real>(v));
    };
  } else {
    throw Error(ErrorCode::kParseError,
                "unknown statistic '" + name + "'; expected one of " +
                    Joined(StatisticSelectors()));
  }
  return stat;
}

std::vector<std::string> StatisticSelectors() {
  return {"apm",  "sapm", "pm-sapm",  "ksapm:K", "maximal",
          "mk:K", "hosoya", "phi1..phi4", "phiL:c=V", "golden16",
          "table:@file"};
}

std::string_view ToString(Objective objective) {
  return objective == Objective::kMax ? "max" : "min";
}

ScanReport Scan(int n, const Statistic& statistic, Objective objective,
                const ScanOptions& options) {
  const auto start = Clock::now();
  const int threads = std::max(1, options.threads);
  TreeStream stream(n, options.max_order);
  std::vector<TreeStream> parts = stream.Partition(threads);
  std::vector<Partial> partials(threads);
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](int i) {
    try {
      Partial& part = partials[i];
      while (auto tree = parts[i].Next()) {
        ++part.scanned;
        if (statistic.domain && !statistic.domain(*tree)) continue;
        ++part.in_domain;
        Offer(part, statistic.evaluate(*tree), *tree, objective);
      }
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(work, i);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Partial merged;
  for (Partial& part : partials) {
    merged.scanned += part.scanned;
    merged.in_domain += part.in_domain;
    if (!part.value) continue;
    if (!merged.value || Better(*part.value, *merged.value, objective)) {
      merged.value = std::move(part.value);
      merged.trees = std::move(part.trees);
    } else if (Compare(*part.value, *merged.value) == 0) {
      merged.trees.merge(part.trees);
    }
  }
  if (!merged.value) {
    throw Error(ErrorCode::kInvalidArgument,
                "no tree of order " + std::to_string(n) +
                    " lies in the domain of " + statistic.name);
  }
  ScanReport report;
  report.n = n;
  report.statistic = statistic.name;
  report.objective = objective;
  report.value = std::move(*merged.value);
  for (auto& [code, tree] : merged.trees) {
    report.argmax.push_back(code);
    report.argmax_trees.push_back(tree);
  }
  report.classes_scanned = merged.scanned;
  report.classes_in_domain = merged.in_domain;
  report.threads = threads;
  report.elapsed_seconds = SecondsSince(start);
  return report;
}

nlohmann::json ToJson(const ScanReport& report, bool include_meta) {
  nlohmann::json j;
  j["schema"] = kScanSchema;
  j["n"] = report.n;
  j["statistic"] = report.statistic;
  j["objective"] = ToString(report.objective);
  j["value"] = ToJson(report.value);
  nlohmann::json codes = nlohmann::json::array();
  for (const auto& c : report.argmax) codes.push_back(c.str());
  j["argmax"] = codes;
  nlohmann::json trees = nlohmann::json::array();
  for (const auto& t : report.argmax_trees) trees.push_back(t.ToEdgeList());
  j["argmax_edge_lists"] = trees;
  j["classes_scanned"] = report.classes_scanned;
  j["classes_in_domain"] = report.classes_in_domain;
  if (include_meta) {
    j["meta"] = {{"elapsed_seconds", report.elapsed_seconds},
                 {"threads", report.threads}};
  }
  return j;
}

bool BatteryReport::all_pass() const { return failures() == 0; }

int BatteryReport::failures() const {
  return static_cast<int>(std::count_if(
      rows.begin(), rows.end(), [](const CheckRow& r) { return !r.pass; }));
}

const std::vector<std::string>& TheoremNames() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> names;
    for (const auto& [name, fn] : Checks()) names.push_back(name);
    return names;
  }();
  return kNames;
}

BatteryReport RunTheoremBattery(int n_max, const BatteryConfig& config) {
  for (const std::string& name : config.theorems) {
    const auto& names = TheoremNames();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "unknown theorem '" + name + "'; expected one of " +
                      Joined(names));
    }
  }
  if (n_max > config.max_order) {
    throw Error(ErrorCode::kOrderTooLarge,
                "n-max " + std::to_string(n_max) +
                    " exceeds the enumeration cap " +
                    std::to_string(config.max_order));
  }
  const auto start = Clock::now();
  BatteryReport report;
  report.n_max = n_max;
  Context ctx{config, report, ScanOptions{config.threads, config.max_order}};
  for (const auto& [name, fn] : Checks()) {
    if (Selected(config, name)) fn(ctx, n_max);
  }
  report.elapsed_seconds = SecondsSince(start);
  return report;
}

nlohmann::json ToJson(const BatteryReport& report, bool include_meta) {
  nlohmann::json j;
  j["schema"] = kBatterySchema;
  j["n_max"] = report.n_max;
  j["pass"] = report.all_pass();
  j["failures"] = report.failures();
  nlohmann::json rows = nlohmann::json::array();
  for (const CheckRow& r : report.rows) {
    nlohmann::json row = {{"theorem", r.theorem},
                          {"n", r.n},
                          {"expected", r.expected},
                          {"observed", r.observed},
                          {"argmax_codes", r.argmax_codes},
                          {"pass", r.pass}};
    if (!r.expected_codes.empty()) row["expected_codes"] = r.expected_codes;
    if (!r.offending.empty()) row["offending"] = r.offending;
    if (!r.note.empty()) row["note"] = r.note;
    rows.push_back(std::move(row));
  }
  j["checks"] = rows;
  if (include_meta) j["meta"] = {{"elapsed_seconds", report.elapsed_seconds}};
  return j;
}

std::string ToCsv(const BatteryReport& report) {
  std::ostringstream out;
  out << "theorem,n,pass,expected,observed,note\n";
  for (const CheckRow& r : report.rows) {
    out << CsvField(r.theorem) << ',' << r.n << ',' << (r.pass ? "PASS" : "FAIL")
        << ',' << CsvField(r.expected) << ',' << CsvField(r.observed) << ','
        << CsvField(r.note) << '\n';
  }
  return out.str();
}

std::vector<Tree> Coronas(int m) {
  std::vector<Tree> out;
  for (const Tree& base : AllTrees(m, kDefaultMaxOrder)) {
    std::vector<Edge> edges = base.edges();
    for (int v = 0; v < m; ++v) edges.push_back({v, m + v});
    out.push_back(Tree::FromEdges(2 * m, edges));
  }
  return out;
}

}  // namespace treematch
