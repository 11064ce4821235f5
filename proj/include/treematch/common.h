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

#ifndef TREEMATCH_COMMON_H_
#define TREEMATCH_COMMON_H_

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace treematch {

// Exact counts. Matching counts overflow 64 bits well inside desk scale.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
// 50 decimal digits (~166-bit mantissa).
using Real = boost::multiprecision::cpp_bin_float_50;

enum class ErrorCode {
  kOk = 0,
  kNotATree = 1,
  kBadFamilyParams = 2,
  kOrderTooLarge = 3,
  kTooLargeForOracle = 4,
  kOrderTooSmall = 5,
  kTooLargeForSymbolic = 6,
  kNonPositiveParameter = 7,
  kMixedKinds = 8,
  kOddOrder = 9,
  kParityMismatch = 10,
  kInfeasibleParity = 11,
  kParseError = 12,
  kInvalidArgument = 13,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// C(n, k); zero when k < 0 or k > n.
BigInt Binomial(int n, int k);

// Parses a decimal ("2", "-1.5", "0.125") or fraction ("3/4") literal exactly.
Rational ParseRational(std::string_view text);

std::string ToString(const BigInt& value);
std::string ToString(const Rational& value);
// Fixed significant digits, trailing zeros trimmed.
std::string ToString(const Real& value, int digits = 30);

}  // namespace treematch

#endif  // TREEMATCH_COMMON_H_
