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

#include "treematch/common.h"

#include <cctype>
#include <sstream>

namespace treematch {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kNotATree: return "NotATree";
    case ErrorCode::kBadFamilyParams: return "BadFamilyParams";
    case ErrorCode::kOrderTooLarge: return "OrderTooLarge";
    case ErrorCode::kTooLargeForOracle: return "TooLargeForOracle";
    case ErrorCode::kOrderTooSmall: return "OrderTooSmall";
    case ErrorCode::kTooLargeForSymbolic: return "TooLargeForSymbolic";
    case ErrorCode::kNonPositiveParameter: return "NonPositiveParameter";
    case ErrorCode::kMixedKinds: return "MixedKinds";
    case ErrorCode::kOddOrder: return "OddOrder";
    case ErrorCode::kParityMismatch: return "ParityMismatch";
    case ErrorCode::kInfeasibleParity: return "InfeasibleParity";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

BigInt Binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Rational ParseRational(std::string_view text) {
  auto fail = [&]() {
    return Error(ErrorCode::kParseError,
                 "bad rational literal '" + std::string(text) + "'");
  };
  if (text.empty()) throw fail();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = ParseRational(text.substr(0, slash));
    Rational den = ParseRational(text.substr(slash + 1));
    if (den == 0) throw fail();
    return num / den;
  }
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  BigInt numerator = 0;
  BigInt denominator = 1;
  bool seen_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    char ch = text[pos];
    if (ch == '.') {
      if (seen_point) throw fail();
      seen_point = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw fail();
    seen_digit = true;
    numerator = numerator * 10 + (ch - '0');
    if (seen_point) denominator *= 10;
  }
  if (!seen_digit) throw fail();
  Rational value(numerator, denominator);
  return negative ? Rational(-value) : value;
}

std::string ToString(const BigInt& value) { return value.str(); }

std::string ToString(const Rational& value) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string ToString(const Real& value, int digits) {
  std::ostringstream out;
  out.precision(digits);
  out << value;
  return out.str();
}

}  // namespace treematch
