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

#include "treematch/spideropt.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "treematch/bounds.h"
#include "treematch/family.h"
#include "treematch/matching.h"

namespace treematch {
namespace {

constexpr int kMaxSkeletonOrder = 30;

// Leaves a center can give up: one per leg, plus itself when it is a leaf of
// the realized tree.
int CenterWeight(int legs, int skeleton_degree) {
  return legs + (legs + skeleton_degree == 1 ? 1 : 0);
}

void CheckCounts(int order, int k) {
  if (order < 2) {
    throw Error(ErrorCode::kOrderTooSmall,
                "strong almost-perfect matchings are undefined for n = 1");
  }
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
}

// Tilings of a path by singles (weight w_i) and dominoes (weight 1),
// counted by number of singles.
template <typename T>
T TilingSum(const std::vector<T>& weights, int k, const T& zero,
            const T& one) {
  const int m = static_cast<int>(weights.size());
  std::vector<std::vector<T>> dp(m + 1, std::vector<T>(k + 1, zero));
  dp[0][0] = one;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= k; ++j) {
      if (dp[i][j] == zero) continue;
      if (j < k) dp[i + 1][j + 1] = dp[i + 1][j + 1] + dp[i][j] * weights[i];
      if (i + 1 < m) dp[i + 2][j] = dp[i + 2][j] + dp[i][j];
    }
  }
  return dp[m][k];
}

std::vector<double> ProjectToSimplex(const std::vector<double>& y,
                                     double total) {
  std::vector<double> u = y;
  std::sort(u.begin(), u.end(), std::greater<double>());
  double prefix = 0, theta = 0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    prefix += u[j];
    double t = (prefix - total) / static_cast<double>(j + 1);
    if (u[j] - t > 0) theta = t;
  }
  std::vector<double> x(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) x[i] = std::max(y[i] - theta, 0.0);
  return x;
}

double FiniteDifferenceError(const Polynomial& p, std::vector<double> x) {
  std::vector<double> grad = p.Gradient(x);
  double worst = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double h = 1e-5 * std::max(1.0, std::abs(x[i]));
    const double xi = x[i];
    x[i] = xi + h;
    double up = p.Evaluate(std::span<const double>(x));
    x[i] = xi - h;
    double down = p.Evaluate(std::span<const double>(x));
    x[i] = xi;
    double fd = (up - down) / (2 * h);
    worst = std::max(worst,
                     std::abs(fd - grad[i]) / std::max(1.0, std::abs(grad[i])));
  }
  return worst;
}

struct Ascent {
  std::vector<double> x;
  double value;
};

// Projected gradient ascent with an adaptive step.
Ascent Climb(const Polynomial& p, std::vector<double> x, double total) {
  double value = p.Evaluate(std::span<const double>(x));
  double step = 1e-2;
  for (int iter = 0; iter < 200000; ++iter) {
    if (ProjectedGradientNorm(p, x) < 1e-13 * std::max(1.0, std::abs(value))) {
      break;
    }
    std::vector<double> grad = p.Gradient(x);
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + step * grad[i];
    std::vector<double> next = ProjectToSimplex(y, total);
    double next_value = p.Evaluate(std::span<const double>(next));
    if (next_value >= value) {
      bool moved = next != x;
      x = std::move(next);
      value = next_value;
      step *= 1.25;
      if (!moved) break;
    } else {
      step *= 0.5;
      if (step < 1e-18) break;
    }
  }
  return {x, value};
}

// Solves a small dense system in place; false when singular.
bool Solve(std::vector<std::vector<double>> a, std::vector<double>& b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) < 1e-300) return false;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      double f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (int i = 0; i < n; ++i) b[i] /= a[i][i];
  return true;
}

// Newton steps on the stationarity conditions g_A = lambda * 1, sum d = 0
// restricted to the positive coordinates; kept only while they help.
void Polish(const Polynomial& p, Ascent& best, double total) {
  const double tol = 1e-12 * std::max(1.0, total);
  for (int iter = 0; iter < 50; ++iter) {
    double norm = ProjectedGradientNorm(p, best.x);
    if (norm == 0) return;
    std::vector<int> active;
    for (std::size_t i = 0; i < best.x.size(); ++i) {
      if (best.x[i] > tol) active.push_back(static_cast<int>(i));
    }
    const int a = static_cast<int>(active.size());
    std::vector<double> grad = p.Gradient(best.x);
    auto hess = p.Hessian(best.x);
    double lambda = 0;
    for (int i : active) lambda += grad[i];
    lambda /= a;
    std::vector<std::vector<double>> kkt(a + 1, std::vector<double>(a + 1, 0));
    std::vector<double> rhs(a + 1, 0);
    for (int r = 0; r < a; ++r) {
      for (int c = 0; c < a; ++c) kkt[r][c] = hess[active[r]][active[c]];
      kkt[r][a] = -1;
      kkt[a][r] = 1;
      rhs[r] = -(grad[active[r]] - lambda);
    }
    if (!Solve(kkt, rhs)) return;
    std::vector<double> next = best.x;
    for (int r = 0; r < a; ++r) next[active[r]] += rhs[r];
    for (double& v : next) v = std::max(v, 0.0);
    double sum = std::accumulate(next.begin(), next.end(), 0.0);
    for (double& v : next) v *= total / sum;
    double next_norm = ProjectedGradientNorm(p, next);
    double next_value = p.Evaluate(std::span<const double>(next));
    if (next_norm >= norm ||
        next_value < best.value - 1e-12 * std::abs(best.value)) {
      return;
    }
    best.x = std::move(next);
    best.value = next_value;
  }
}

// Expands per-variable leg counts to the full chain.
std::vector<int> Expand(const std::vector<int>& values,
                        const std::vector<int>& var_index) {
  std::vector<int> legs(var_index.size());
  for (std::size_t i = 0; i < var_index.size(); ++i) {
    legs[i] = values[var_index[i]];
  }
  return legs;
}

long long CompositionCount(int total, int parts) {
  // C(total + parts - 1, parts - 1), saturating.
  long double c = 1;
  for (int i = 1; i < parts; ++i) {
    c = c * (total + i) / i;
    if (c > 4e18L) return std::numeric_limits<long long>::max();
  }
  return static_cast<long long>(std::llround(c));
}

template <typename Fn>
void ForEachComposition(int total, int parts, std::vector<int>& current,
                        Fn&& fn) {
  if (static_cast<int>(current.size()) == parts - 1) {
    current.push_back(total);
    fn(current);
    current.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    current.push_back(v);
    ForEachComposition(total - v, parts, current, fn);
    current.pop_back();
  }
}

std::string VariableName(int i, int count) {
  if (count <= 26) return std::string(1, static_cast<char>('a' + i));
  return "x" + std::to_string(i + 1);
}

std::vector<double> MeanNormalized(const std::vector<double>& x) {
  double sum = std::accumulate(x.begin(), x.end(), 0.0);
  std::vector<double> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    r[i] = sum > 0 ? x[i] * static_cast<double>(x.size()) / sum : 0.0;
  }
  return r;
}

}  // namespace

int ChainProfile::order() const {
  return static_cast<int>(legs.size()) +
         2 * std::accumulate(legs.begin(), legs.end(), 0);
}

Tree ChainProfile::Realize() const { return MakeSpiderChain(legs); }

BigInt KSapmSkeletonCount(const Tree& skeleton, std::span<const int> legs,
                          int k) {
  const int m = skeleton.order();
  if (static_cast<int>(legs.size()) != m) {
    throw Error(ErrorCode::kInvalidArgument,
                "need one leg count per skeleton vertex");
  }
  if (m > kMaxSkeletonOrder) {
    throw Error(ErrorCode::kTooLargeForOracle,
                "skeleton enumeration limited to order " +
                    std::to_string(kMaxSkeletonOrder));
  }
  CheckCounts(m + 2 * std::accumulate(legs.begin(), legs.end(), 0), k);
  if ((m - k) % 2 != 0 || k > m) return 0;
  std::vector<BigInt> weight(m);
  for (int v = 0; v < m; ++v) {
    weight[v] = CenterWeight(legs[v], m == 1 ? 0 : skeleton.degree(v));
  }
  BigInt total = 0;
  std::vector<int> chosen;
  // Gosper-style walk over k-subsets as bit masks.
  for (std::uint32_t mask = (1u << k) - 1; mask < (1u << m);) {
    chosen.clear();
    BigInt product = 1;
    for (int v = 0; v < m; ++v) {
      if (mask >> v & 1u) {
        chosen.push_back(v);
        product *= weight[v];
      }
    }
    if (product != 0 && PerfectMatchingWithout(skeleton, chosen)) {
      total += product;
    }
    std::uint32_t low = mask & -mask;
    std::uint32_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
  return total;
}

BigInt KSapmChainCount(const ChainProfile& profile, int k) {
  const int m = static_cast<int>(profile.legs.size());
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "empty chain");
  for (int l : profile.legs) {
    if (l < 0) throw Error(ErrorCode::kInvalidArgument, "negative leg count");
  }
  CheckCounts(profile.order(), k);
  if ((profile.order() - k) % 2 != 0) {
    throw Error(ErrorCode::kParityMismatch,
                "order " + std::to_string(profile.order()) + " minus k = " +
                    std::to_string(k) + " is odd");
  }
  std::vector<BigInt> weights(m);
  for (int i = 0; i < m; ++i) {
    int skeleton_degree = m == 1 ? 0 : (i == 0 || i == m - 1 ? 1 : 2);
    weights[i] = CenterWeight(profile.legs[i], skeleton_degree);
  }
  return TilingSum<BigInt>(weights, k, BigInt(0), BigInt(1));
}

BigInt KSpiderWheelCount(int k, int a) {
  if (k < 1 || a < 1) {
    throw Error(ErrorCode::kBadFamilyParams, "wheel needs k, a >= 1");
  }
  return BigInt(k + 1) * boost::multiprecision::pow(BigInt(a), k);
}

Polynomial ChainPolynomial(int m, int k, std::span<const int> var_index) {
  if (m < 1 || static_cast<int>(var_index.size()) != m) {
    throw Error(ErrorCode::kInvalidArgument, "need one variable per center");
  }
  const int vars = *std::max_element(var_index.begin(), var_index.end()) + 1;
  std::vector<Polynomial> weights;
  for (int i = 0; i < m; ++i) {
    weights.push_back(Polynomial::Variable(vars, var_index[i]));
  }
  return TilingSum<Polynomial>(weights, k, Polynomial(vars),
                               Polynomial::Constant(vars, 1));
}

std::vector<int> MirroredIndex(int m) {
  std::vector<int> index(m);
  for (int i = 0; i < m; ++i) index[i] = std::min(i, m - 1 - i);
  return index;
}

double ProjectedGradientNorm(const Polynomial& p, std::span<const double> x) {
  std::vector<double> grad = p.Gradient(x);
  const double total = std::accumulate(x.begin(), x.end(), 0.0);
  const double tol = 1e-12 * std::max(1.0, total);
  double mean = 0;
  int active = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > tol) {
      mean += grad[i];
      ++active;
    }
  }
  if (active == 0) return 0;
  mean /= active;
  double sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double r = grad[i] - mean;
    if (x[i] <= tol) r = std::max(r, 0.0);
    sum += r * r;
  }
  return std::sqrt(sum);
}

OptimizeResult OptimizeLeafDistribution(const OptimizeOptions& options) {
  const int m = options.m, k = options.k;
  if (m < 2) throw Error(ErrorCode::kInvalidArgument, "chain needs m >= 2");
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  if (options.total_legs < 0) {
    throw Error(ErrorCode::kInvalidArgument, "total legs must be >= 0");
  }
  if (options.starts < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one start");
  }
  if ((m - k) % 2 != 0) {
    throw Error(ErrorCode::kInfeasibleParity,
                "chain of " + std::to_string(m) + " centers has odd order; "
                "k = " + std::to_string(k) + " leaves cannot be avoided");
  }
  if (options.symmetric && m % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "symmetric profiles need an even chain length");
  }
  std::vector<int> var_index(m);
  std::iota(var_index.begin(), var_index.end(), 0);
  if (options.symmetric) var_index = MirroredIndex(m);
  const int vars = *std::max_element(var_index.begin(), var_index.end()) + 1;

  int total = vars;
  if (options.total_legs > 0) {
    if (options.symmetric && options.total_legs % 2 != 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "symmetric profiles need an even number of legs");
    }
    total = options.symmetric ? options.total_legs / 2 : options.total_legs;
  }

  Polynomial poly = ChainPolynomial(m, k, var_index);
  std::vector<std::string> names;
  for (int i = 0; i < vars; ++i) names.push_back(VariableName(i, vars));

  OptimizeResult result;
  result.mode = options.mode;
  result.variables = vars;
  result.total = total;
  result.polynomial = poly.ToString(names);

  if (options.mode == OptimizeMode::kInteger) {
    auto value_of = [&](const std::vector<int>& values) {
      return KSapmChainCount({Expand(values, var_index)}, k);
    };
    // Every center keeps at least one leg, so each is a genuine spider.
    if (total < vars) {
      throw Error(ErrorCode::kInvalidArgument,
                  "integer mode needs at least one leg per center");
    }
    std::vector<int> best;
    BigInt best_value = -1;
    if (CompositionCount(total - vars, vars) <= kExhaustiveCompositionLimit) {
      result.exhaustive = true;
      std::vector<int> current;
      ForEachComposition(
          total - vars, vars, current, [&](const std::vector<int>& c) {
            std::vector<int> shifted = c;
            for (int& v : shifted) ++v;
            BigInt v = value_of(shifted);
            if (v > best_value) {
              best_value = v;
              best = shifted;
            }
          });
    } else {
      // Local search over single-leg transfers from the balanced profile.
      best.assign(vars, total / vars);
      for (int i = 0; i < total % vars; ++i) ++best[i];
      best_value = value_of(best);
      for (bool improved = true; improved;) {
        improved = false;
        std::vector<int> best_move = best;
        for (int from = 0; from < vars; ++from) {
          if (best[from] <= 1) continue;
          for (int to = 0; to < vars; ++to) {
            if (to == from) continue;
            std::vector<int> trial = best;
            --trial[from];
            ++trial[to];
            BigInt v = value_of(trial);
            if (v > best_value) {
              best_value = v;
              best_move = trial;
              improved = true;
            }
          }
        }
        best = best_move;
      }
    }
    result.profile = best;
    result.integer_value = best_value;
    std::vector<double> point(best.begin(), best.end());
    result.point = point;
    result.value = poly.Evaluate(std::span<const double>(point));
    result.ratio = MeanNormalized(point);
    result.gradient_norm = ProjectedGradientNorm(poly, point);
    result.finite_difference_error = FiniteDifferenceError(poly, point);
    return result;
  }

  std::mt19937_64 rng(options.seed);
  std::exponential_distribution<double> draw(1.0);
  Ascent best{{}, -1};
  for (int s = 0; s < options.starts; ++s) {
    std::vector<double> start(vars, static_cast<double>(total) / vars);
    if (s > 0) {
      double sum = 0;
      for (double& v : start) sum += v = draw(rng);
      for (double& v : start) v *= total / sum;
    }
    Ascent run = Climb(poly, start, total);
    Polish(poly, run, total);
    if (run.value > best.value) best = std::move(run);
  }
  result.point = best.x;
  result.value = best.value;
  result.ratio = MeanNormalized(best.x);
  result.gradient_norm = ProjectedGradientNorm(poly, best.x);
  result.finite_difference_error = FiniteDifferenceError(poly, best.x);
  return result;
}

std::vector<GrowthRow> KsapmGrowthCheck(int k, std::span<const int> orders) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  std::vector<GrowthRow> rows;
  for (int n : orders) {
    int q = (n - 1) / (k + 1);
    if (n < 1 || (n - 1) % (k + 1) != 0 || q % 2 == 0 || q < 3) {
      throw Error(ErrorCode::kInvalidArgument,
                  "order " + std::to_string(n) +
                      " is not (k+1)(2a+1)+1 for any a >= 1");
    }
    GrowthRow row;
    row.n = n;
    row.k = k;
    row.a = (q - 1) / 2;
    row.wheel_count = KSpiderWheelCount(k, row.a);
    row.best_known = row.wheel_count;
    row.best_known_family = ToString(
        FamilySpec::Of(Family::kKSpiderWheel, {k, row.a}));
    if (k == 1 && n % 2 == 1 && OddSapmMax(n) > row.best_known) {
      row.best_known = OddSapmMax(n);
      row.best_known_family = ToString(FamilySpec::Of(Family::kSpider, {n}));
    }
    if (k == 2 && n % 2 == 0) {
      FTableEntry f = FTable(n);
      if (f.value > row.best_known) {
        row.best_known = f.value;
        row.best_known_family = ToString(f.families.front());
      }
    }
    row.binomial = Binomial(n, k);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace treematch
