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

#ifndef TREEMATCH_POLYNOMIAL_H_
#define TREEMATCH_POLYNOMIAL_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "treematch/common.h"

namespace treematch {

// Multivariate polynomial with integer coefficients in a fixed number of
// variables. Zero coefficients are never stored.
class Polynomial {
 public:
  using Monomial = std::vector<int>;  // exponent per variable

  explicit Polynomial(int num_vars = 0) : num_vars_(num_vars) {}

  static Polynomial Constant(int num_vars, const BigInt& value);
  static Polynomial Variable(int num_vars, int index);

  int num_vars() const { return num_vars_; }
  const std::map<Monomial, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Largest total degree; -1 for the zero polynomial.
  int degree() const;

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const BigInt& scalar, const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  BigInt Evaluate(std::span<const BigInt> x) const;
  double Evaluate(std::span<const double> x) const;
  std::vector<double> Gradient(std::span<const double> x) const;
  std::vector<std::vector<double>> Hessian(std::span<const double> x) const;

  // Terms in descending monomial order, e.g. "a^2*b^2 + 2*a^2*b*c".
  // Defaults to x0, x1, ... when names are omitted.
  std::string ToString(std::span<const std::string> names = {}) const;

 private:
  void Add(const Monomial& m, const BigInt& coefficient);

  int num_vars_;
  std::map<Monomial, BigInt> terms_;
};

}  // namespace treematch

#endif  // TREEMATCH_POLYNOMIAL_H_
