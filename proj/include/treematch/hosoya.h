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

#ifndef TREEMATCH_HOSOYA_H_
#define TREEMATCH_HOSOYA_H_

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "treematch/common.h"
#include "treematch/tree.h"

namespace treematch {

// Number of matchings, including the empty one.
BigInt HosoyaIndex(const Tree& tree);

// Z(P_n) under the indexing fib(1) = 1, fib(2) = 2, fib(n) = fib(n-1) +
// fib(n-2); fib(0) = 1.
BigInt ShiftedFibonacci(int n);

// Vertex-degree-based edge weights phi(i, j), i and j the endpoint degrees.
enum class WeightKind {
  kExpSum,       // c^(i+j)
  kExpProd,      // c^(i*j)
  kPowSum,       // (i+j)^c
  kPowProd,      // (i*j)^c
  kGoldenFloor,  // golden^(16*floor(i*j/16))
  kTable,        // explicit positive rational weights
};

struct WeightFamily {
  WeightKind kind = WeightKind::kExpSum;
  Rational c = 1;
  // Keys have first <= second.
  std::map<std::pair<int, int>, Rational> table;
  // Set when the table was loaded from a file; used by ToString.
  std::string table_path;

  static WeightFamily Of(WeightKind kind, Rational c = 1) {
    WeightFamily f;
    f.kind = kind;
    f.c = std::move(c);
    return f;
  }
  static WeightFamily ExpSum(Rational c) { return Of(WeightKind::kExpSum, c); }
  static WeightFamily ExpProd(Rational c) { return Of(WeightKind::kExpProd, c); }
  static WeightFamily PowSum(Rational c) { return Of(WeightKind::kPowSum, c); }
  static WeightFamily PowProd(Rational c) { return Of(WeightKind::kPowProd, c); }
  static WeightFamily GoldenFloor() { return Of(WeightKind::kGoldenFloor); }

  // "phi1:c=2", "phi2:c=1.5", "phi3:c=3", "phi4:c=2", "golden16",
  // "table:@path" (lines "i j w", w rational). Throws Error(kParseError).
  static WeightFamily Parse(std::string_view text);
  // Table body, one "i j w" per line.
  static WeightFamily ParseTable(std::string_view body);
};

std::string ToString(const WeightFamily& family);

// Exact value a + b*golden, golden = (1 + sqrt 5) / 2.
struct GoldenNumber {
  BigInt a = 0;
  BigInt b = 0;

  GoldenNumber() = default;
  GoldenNumber(BigInt a_in, BigInt b_in = 0)  // NOLINT: implicit from integer
      : a(std::move(a_in)), b(std::move(b_in)) {}

  static GoldenNumber PhiPower(unsigned exponent);

  GoldenNumber& operator+=(const GoldenNumber& other);
  friend GoldenNumber operator+(GoldenNumber x, const GoldenNumber& y) {
    return x += y;
  }
  friend GoldenNumber operator*(const GoldenNumber& x, const GoldenNumber& y);
  friend bool operator==(const GoldenNumber&, const GoldenNumber&) = default;
  friend std::strong_ordering operator<=>(const GoldenNumber& x,
                                          const GoldenNumber& y);

  Real ToReal() const;
  std::string ToString() const;
};

// Exact formal sum for one weight family:
//   exponent form: sum of count * base^e  (base = c, or golden)
//   base form:     sum of count * B^c
// Terms are keyed by descriptor (e or B), largest first.
class SymbolicIndex {
 public:
  enum class Form { kExponent, kBase };
  using Terms = std::map<BigInt, BigInt, std::greater<BigInt>>;

  SymbolicIndex(Form form, Terms terms)
      : form_(form), terms_(std::move(terms)) {}

  Form form() const { return form_; }
  const Terms& terms() const { return terms_; }

  BigInt TotalCount() const;
  const BigInt& TopDescriptor() const { return terms_.begin()->first; }

  // "4*c^15 + 2*c^14 + 1" or "2*48^c + 36^c + ...".
  std::string ToString(std::string_view symbol = "c") const;

  friend bool operator==(const SymbolicIndex&, const SymbolicIndex&) = default;

 private:
  Form form_;
  Terms terms_;
};

inline constexpr std::size_t kMaxSymbolicTerms = 1'000'000;

// Descriptor-indexed rooted dynamic program. Kind kTable is rejected with
// Error(kInvalidArgument); Error(kTooLargeForSymbolic) past kMaxSymbolicTerms.
SymbolicIndex WeightedHosoyaSymbolic(const Tree& tree,
                                     const WeightFamily& family);

// Exact rational when the weights are rational (phi1, phi2, table, and
// phi3/phi4 with integer c); a 50-digit real otherwise. kGoldenFloor is
// always real here; WeightedHosoyaGolden gives the exact value.
using HosoyaValue = std::variant<Rational, Real>;

Real ToReal(const HosoyaValue& value);
std::string ToString(const HosoyaValue& value);

// Throws Error(kNonPositiveParameter) when c <= 0 for phi1/phi2, c < 0 for
// phi3/phi4, or a table weight is not positive.
HosoyaValue WeightedHosoyaNumeric(const Tree& tree, const WeightFamily& family);
HosoyaValue WeightedHosoyaNumeric(const Tree& tree, WeightKind kind,
                                  const Rational& c);

GoldenNumber WeightedHosoyaGolden(const Tree& tree);

// Evaluates the formal sum at the family's parameter.
HosoyaValue Evaluate(const SymbolicIndex& index, const WeightFamily& family);
GoldenNumber EvaluateGolden(const SymbolicIndex& index);

// Order of the two sums as c grows without bound: compare terms from the
// largest descriptor down, larger descriptor first, then larger count.
// Throws Error(kMixedKinds) when the forms differ.
std::strong_ordering AsymptoticCompare(const SymbolicIndex& a,
                                       const SymbolicIndex& b);

// Largest product of k positive integers summing to `sum`:
// (q+1)^r * q^(k-r) with sum = q*k + r, 0 <= r < k.
BigInt BalancedProductBound(int sum, int k);

// Per-matching bounds used by the large-c arguments.
// Sum over M of deg(u)*deg(v) <= floor(n^2/4), n >= 6.
BigInt DegreeProductSumBound(int n);
// Product over M of (deg(u)+deg(v)) <= 9*4^((n-4)/2) (n even) or
// 3*4^((n-3)/2) (n odd), n >= 4.
BigInt DegreeSumProductBound(int n);
// Product of all vertex degrees <= 2^(n-2), n >= 2.
BigInt AllDegreeProductBound(int n);

}  // namespace treematch

#endif  // TREEMATCH_HOSOYA_H_
