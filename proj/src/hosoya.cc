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

#include "treematch/hosoya.h"

#include <cctype>
#include <fstream>
#include <sstream>

#include "rooted.h"
#include "treematch/matching.h"

namespace treematch {
namespace {

using AscendingTerms = std::map<BigInt, BigInt>;

Rational PowInt(const Rational& base, unsigned exponent) {
  Rational result = 1, b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

BigInt PowInt(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

Real Golden() {
  static const Real kGolden = (1 + boost::multiprecision::sqrt(Real(5))) / 2;
  return kGolden;
}

bool IsInteger(const Rational& c) {
  return boost::multiprecision::denominator(c) == 1;
}

int GoldenExponent(int i, int j) { return 16 * ((i * j) / 16); }

// Sum over matchings of the product of edge weights, by a rooted two-state
// program. T needs +, * and construction from 0 and 1.
template <typename T, typename WeightFn>
T MatchingSum(const Tree& tree, WeightFn weight) {
  const int n = tree.order();
  internal::Rooting r = internal::RootAt(tree);
  std::vector<T> free_(n, T(1)), covered(n, T(0));
  for (auto it = r.preorder.rbegin(); it != r.preorder.rend(); ++it) {
    int v = *it;
    int p = r.parent[v];
    if (p < 0) continue;
    T child_any = free_[v] + covered[v];
    T w = weight(tree.degree(p), tree.degree(v));
    covered[p] = covered[p] * child_any + free_[p] * free_[v] * w;
    free_[p] = free_[p] * child_any;
  }
  int root = r.preorder.front();
  return free_[root] + covered[root];
}

void CheckParameter(const WeightFamily& family) {
  switch (family.kind) {
    case WeightKind::kExpSum:
    case WeightKind::kExpProd:
      if (family.c <= 0) {
        throw Error(ErrorCode::kNonPositiveParameter,
                    "c must be positive, got " + ToString(family.c));
      }
      break;
    case WeightKind::kPowSum:
    case WeightKind::kPowProd:
      if (family.c < 0) {
        throw Error(ErrorCode::kNonPositiveParameter,
                    "c must be non-negative, got " + ToString(family.c));
      }
      break;
    case WeightKind::kTable:
      for (const auto& [key, w] : family.table) {
        if (w <= 0) {
          throw Error(ErrorCode::kNonPositiveParameter,
                      "table weight for (" + std::to_string(key.first) + "," +
                          std::to_string(key.second) + ") is not positive");
        }
      }
      break;
    case WeightKind::kGoldenFloor:
      break;
  }
}

const Rational& TableWeight(const WeightFamily& family, int i, int j) {
  auto it = family.table.find({std::min(i, j), std::max(i, j)});
  if (it == family.table.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "weight table has no entry for degrees (" + std::to_string(i) +
                    "," + std::to_string(j) + ")");
  }
  return it->second;
}

Real RealPower(const BigInt& base, const Rational& c) {
  if (base == 1 || c == 0) return 1;
  return boost::multiprecision::pow(Real(base), Real(c));
}

// Descriptor of one edge and how descriptors combine.
struct Descriptor {
  SymbolicIndex::Form form;
  std::function<BigInt(int, int)> of_edge;
};

Descriptor DescriptorFor(WeightKind kind) {
  using Form = SymbolicIndex::Form;
  switch (kind) {
    case WeightKind::kExpSum:
      return {Form::kExponent, [](int i, int j) { return BigInt(i + j); }};
    case WeightKind::kExpProd:
      return {Form::kExponent, [](int i, int j) { return BigInt(i * j); }};
    case WeightKind::kGoldenFloor:
      return {Form::kExponent,
              [](int i, int j) { return BigInt(GoldenExponent(i, j)); }};
    case WeightKind::kPowSum:
      return {Form::kBase, [](int i, int j) { return BigInt(i + j); }};
    case WeightKind::kPowProd:
      return {Form::kBase, [](int i, int j) { return BigInt(i * j); }};
    case WeightKind::kTable:
      break;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "table weights have no symbolic form; use the numeric routine");
}

AscendingTerms Sum(const AscendingTerms& a, const AscendingTerms& b) {
  AscendingTerms out = a;
  for (const auto& [d, count] : b) out[d] += count;
  return out;
}

AscendingTerms Product(const AscendingTerms& a, const AscendingTerms& b,
                       SymbolicIndex::Form form) {
  AscendingTerms out;
  for (const auto& [da, ca] : a) {
    for (const auto& [db, cb] : b) {
      BigInt d = form == SymbolicIndex::Form::kExponent ? BigInt(da + db)
                                                        : BigInt(da * db);
      out[d] += ca * cb;
    }
  }
  if (out.size() > kMaxSymbolicTerms) {
    throw Error(ErrorCode::kTooLargeForSymbolic,
                "symbolic form exceeds " + std::to_string(kMaxSymbolicTerms) +
                    " terms");
  }
  return out;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

Error BadFamily(std::string_view text, const std::string& why) {
  return Error(ErrorCode::kParseError,
               "bad weight family '" + std::string(text) + "': " + why);
}

}  // namespace

BigInt HosoyaIndex(const Tree& tree) {
  BigInt total = 0;
  for (const BigInt& m : ComputeMatchingProfile(tree)) total += m;
  return total;
}

BigInt ShiftedFibonacci(int n) {
  BigInt prev = 1, cur = 1;  // fib(0), fib(1)
  for (int i = 1; i < n; ++i) {
    BigInt next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return n <= 0 ? BigInt(1) : cur;
}

WeightFamily WeightFamily::Parse(std::string_view text) {
  std::string_view s = Trim(text);
  if (s == "golden16") return GoldenFloor();
  if (s.rfind("table:@", 0) == 0) {
    std::string path(s.substr(7));
    std::ifstream in(path);
    if (!in) throw BadFamily(text, "cannot read " + path);
    std::stringstream body;
    body << in.rdbuf();
    WeightFamily family = ParseTable(body.str());
    family.table_path = path;
    return family;
  }
  static const std::pair<std::string_view, WeightKind> kPrefixes[] = {
      {"phi1", WeightKind::kExpSum},
      {"phi2", WeightKind::kExpProd},
      {"phi3", WeightKind::kPowSum},
      {"phi4", WeightKind::kPowProd},
  };
  for (const auto& [prefix, kind] : kPrefixes) {
    if (s.rfind(prefix, 0) != 0) continue;
    std::string_view rest = s.substr(prefix.size());
    if (rest.rfind(":c=", 0) != 0) throw BadFamily(text, "expected ':c=<value>'");
    try {
      return Of(kind, ParseRational(rest.substr(3)));
    } catch (const Error& e) {
      throw BadFamily(text, e.what());
    }
  }
  throw BadFamily(text,
                  "expected phi1..phi4:c=<value>, golden16 or table:@<file>");
}

WeightFamily WeightFamily::ParseTable(std::string_view body) {
  WeightFamily family = Of(WeightKind::kTable);
  std::istringstream in{std::string(body)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view content = Trim(line);
    if (content.empty() || content.front() == '#') continue;
    std::istringstream fields{std::string(content)};
    int i = 0, j = 0;
    std::string w, extra;
    if (!(fields >> i >> j >> w) || (fields >> extra) || i < 1 || j < 1) {
      throw Error(ErrorCode::kParseError,
                  "weight table line " + std::to_string(line_no) +
                      ": expected 'i j w'");
    }
    Rational weight = ParseRational(w);
    if (weight <= 0) {
      throw Error(ErrorCode::kNonPositiveParameter,
                  "weight table line " + std::to_string(line_no) +
                      ": weight must be positive");
    }
    auto key = std::make_pair(std::min(i, j), std::max(i, j));
    auto [it, inserted] = family.table.emplace(key, weight);
    if (!inserted && it->second != weight) {
      throw Error(ErrorCode::kParseError,
                  "weight table line " + std::to_string(line_no) +
                      ": conflicting weight for symmetric pair");
    }
  }
  return family;
}

std::string ToString(const WeightFamily& family) {
  switch (family.kind) {
    case WeightKind::kExpSum: return "phi1:c=" + ToString(family.c);
    case WeightKind::kExpProd: return "phi2:c=" + ToString(family.c);
    case WeightKind::kPowSum: return "phi3:c=" + ToString(family.c);
    case WeightKind::kPowProd: return "phi4:c=" + ToString(family.c);
    case WeightKind::kGoldenFloor: return "golden16";
    case WeightKind::kTable:
      return "table:@" +
             (family.table_path.empty() ? std::string("-") : family.table_path);
  }
  return "";
}

GoldenNumber GoldenNumber::PhiPower(unsigned exponent) {
  // golden^e = F(e-1) + F(e) * golden.
  BigInt f_prev = 1, f = 0;  // F(-1), F(0)
  for (unsigned i = 0; i < exponent; ++i) {
    BigInt next = f_prev + f;
    f_prev = std::move(f);
    f = std::move(next);
  }
  return {f_prev, f};
}

GoldenNumber& GoldenNumber::operator+=(const GoldenNumber& other) {
  a += other.a;
  b += other.b;
  return *this;
}

GoldenNumber operator*(const GoldenNumber& x, const GoldenNumber& y) {
  // golden^2 = golden + 1.
  BigInt bd = x.b * y.b;
  return {x.a * y.a + bd, x.a * y.b + x.b * y.a + bd};
}

std::strong_ordering operator<=>(const GoldenNumber& x,
                                 const GoldenNumber& y) {
  // 2(x - y) = p + q*sqrt(5).
  BigInt da = x.a - y.a, db = x.b - y.b;
  BigInt p = 2 * da + db, q = db;
  auto sign = [](const BigInt& v) { return v.sign(); };
  int sp = sign(p), sq = sign(q);
  int result;
  if (sp >= 0 && sq >= 0) {
    result = (sp > 0 || sq > 0) ? 1 : 0;
  } else if (sp <= 0 && sq <= 0) {
    result = -1;
  } else {
    BigInt p2 = p * p, q2 = 5 * q * q;
    // Opposite signs; the larger magnitude wins.
    int p_wins = p2 > q2 ? 1 : (p2 < q2 ? -1 : 0);
    result = p_wins * (sp > 0 ? 1 : -1);
  }
  if (result > 0) return std::strong_ordering::greater;
  if (result < 0) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

Real GoldenNumber::ToReal() const { return Real(a) + Real(b) * Golden(); }

std::string GoldenNumber::ToString() const {
  return treematch::ToString(a) + " + " + treematch::ToString(b) + "*phi";
}

BigInt SymbolicIndex::TotalCount() const {
  BigInt total = 0;
  for (const auto& [d, count] : terms_) total += count;
  return total;
}

std::string SymbolicIndex::ToString(std::string_view symbol) const {
  std::string out;
  for (const auto& [d, count] : terms_) {
    if (!out.empty()) out += " + ";
    std::string ds = treematch::ToString(d);
    std::string cs = treematch::ToString(count);
    std::string prefix = count == 1 ? "" : cs + "*";
    if (form_ == Form::kExponent) {
      out += d == 0 ? cs : prefix + std::string(symbol) + "^" + ds;
    } else {
      out += d == 1 ? cs : prefix + ds + "^" + std::string(symbol);
    }
  }
  return out;
}

SymbolicIndex WeightedHosoyaSymbolic(const Tree& tree,
                                     const WeightFamily& family) {
  Descriptor desc = DescriptorFor(family.kind);
  const BigInt identity =
      desc.form == SymbolicIndex::Form::kExponent ? BigInt(0) : BigInt(1);
  const int n = tree.order();
  internal::Rooting r = internal::RootAt(tree);
  std::vector<AscendingTerms> free_(n, AscendingTerms{{identity, 1}});
  std::vector<AscendingTerms> covered(n);
  for (auto it = r.preorder.rbegin(); it != r.preorder.rend(); ++it) {
    int v = *it;
    int p = r.parent[v];
    if (p < 0) continue;
    AscendingTerms child_any = Sum(free_[v], covered[v]);
    AscendingTerms edge{{desc.of_edge(tree.degree(p), tree.degree(v)), 1}};
    AscendingTerms via_edge =
        Product(Product(free_[p], free_[v], desc.form), edge, desc.form);
    covered[p] = Sum(Product(covered[p], child_any, desc.form), via_edge);
    free_[p] = Product(free_[p], child_any, desc.form);
  }
  int root = r.preorder.front();
  AscendingTerms total = Sum(free_[root], covered[root]);
  SymbolicIndex::Terms terms;
  for (auto& [d, count] : total) {
    if (count != 0) terms.emplace(d, count);
  }
  return SymbolicIndex(desc.form, std::move(terms));
}

Real ToReal(const HosoyaValue& value) {
  if (const Rational* q = std::get_if<Rational>(&value)) {
    return Real(boost::multiprecision::numerator(*q)) /
           Real(boost::multiprecision::denominator(*q));
  }
  return std::get<Real>(value);
}

std::string ToString(const HosoyaValue& value) {
  if (const Rational* q = std::get_if<Rational>(&value)) return ToString(*q);
  return ToString(std::get<Real>(value));
}

HosoyaValue WeightedHosoyaNumeric(const Tree& tree,
                                  const WeightFamily& family) {
  CheckParameter(family);
  const Rational& c = family.c;
  switch (family.kind) {
    case WeightKind::kExpSum:
      return MatchingSum<Rational>(
          tree, [&](int i, int j) { return PowInt(c, i + j); });
    case WeightKind::kExpProd:
      return MatchingSum<Rational>(
          tree, [&](int i, int j) { return PowInt(c, i * j); });
    case WeightKind::kPowSum:
    case WeightKind::kPowProd: {
      auto base = [&](int i, int j) {
        return family.kind == WeightKind::kPowSum ? i + j : i * j;
      };
      if (IsInteger(c)) {
        unsigned e = static_cast<unsigned>(boost::multiprecision::numerator(c));
        return MatchingSum<Rational>(tree, [&](int i, int j) {
          return Rational(PowInt(BigInt(base(i, j)), e));
        });
      }
      return MatchingSum<Real>(
          tree, [&](int i, int j) { return RealPower(base(i, j), c); });
    }
    case WeightKind::kGoldenFloor:
      return MatchingSum<Real>(tree, [](int i, int j) {
        return boost::multiprecision::pow(Golden(), GoldenExponent(i, j));
      });
    case WeightKind::kTable:
      return MatchingSum<Rational>(
          tree, [&](int i, int j) { return TableWeight(family, i, j); });
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown weight kind");
}

HosoyaValue WeightedHosoyaNumeric(const Tree& tree, WeightKind kind,
                                  const Rational& c) {
  return WeightedHosoyaNumeric(tree, WeightFamily::Of(kind, c));
}

GoldenNumber WeightedHosoyaGolden(const Tree& tree) {
  return MatchingSum<GoldenNumber>(tree, [](int i, int j) {
    return GoldenNumber::PhiPower(GoldenExponent(i, j));
  });
}

HosoyaValue Evaluate(const SymbolicIndex& index, const WeightFamily& family) {
  CheckParameter(family);
  if (family.kind == WeightKind::kGoldenFloor) {
    return EvaluateGolden(index).ToReal();
  }
  const Rational& c = family.c;
  if (index.form() == SymbolicIndex::Form::kExponent) {
    Rational total = 0;
    for (const auto& [d, count] : index.terms()) {
      total += Rational(count) * PowInt(c, static_cast<unsigned>(d));
    }
    return total;
  }
  if (IsInteger(c)) {
    unsigned e = static_cast<unsigned>(boost::multiprecision::numerator(c));
    BigInt total = 0;
    for (const auto& [d, count] : index.terms()) total += count * PowInt(d, e);
    return Rational(total);
  }
  Real total = 0;
  for (const auto& [d, count] : index.terms()) {
    total += Real(count) * RealPower(d, c);
  }
  return total;
}

GoldenNumber EvaluateGolden(const SymbolicIndex& index) {
  GoldenNumber total;
  for (const auto& [d, count] : index.terms()) {
    GoldenNumber term = GoldenNumber::PhiPower(static_cast<unsigned>(d));
    total += GoldenNumber{term.a * count, term.b * count};
  }
  return total;
}

std::strong_ordering AsymptoticCompare(const SymbolicIndex& a,
                                       const SymbolicIndex& b) {
  if (a.form() != b.form()) {
    throw Error(ErrorCode::kMixedKinds,
                "cannot compare exponent-form and base-form sums");
  }
  auto ia = a.terms().begin(), ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) {
      return ia->first > ib->first ? std::strong_ordering::greater
                                   : std::strong_ordering::less;
    }
    if (ia->second != ib->second) {
      return ia->second > ib->second ? std::strong_ordering::greater
                                     : std::strong_ordering::less;
    }
  }
  if (ia != a.terms().end()) return std::strong_ordering::greater;
  if (ib != b.terms().end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

BigInt BalancedProductBound(int sum, int k) {
  if (k < 1 || sum < k) {
    throw Error(ErrorCode::kInvalidArgument,
                "need k >= 1 parts and sum >= k");
  }
  int q = sum / k, r = sum % k;
  return PowInt(BigInt(q + 1), r) * PowInt(BigInt(q), k - r);
}

BigInt DegreeProductSumBound(int n) { return BigInt(n) * n / 4; }

BigInt DegreeSumProductBound(int n) {
  if (n < 4) throw Error(ErrorCode::kInvalidArgument, "needs n >= 4");
  if (n % 2 == 0) return 9 * PowInt(BigInt(4), (n - 4) / 2);
  return 3 * PowInt(BigInt(4), (n - 3) / 2);
}

BigInt AllDegreeProductBound(int n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "needs n >= 2");
  return PowInt(BigInt(2), n - 2);
}

}  // namespace treematch
