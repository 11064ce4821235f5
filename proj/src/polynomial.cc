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

#include "treematch/polynomial.h"

#include <cmath>
#include <numeric>

namespace treematch {

Polynomial Polynomial::Constant(int num_vars, const BigInt& value) {
  Polynomial p(num_vars);
  p.Add(Monomial(num_vars, 0), value);
  return p;
}

Polynomial Polynomial::Variable(int num_vars, int index) {
  if (index < 0 || index >= num_vars) {
    throw Error(ErrorCode::kInvalidArgument, "variable index out of range");
  }
  Polynomial p(num_vars);
  Monomial m(num_vars, 0);
  m[index] = 1;
  p.Add(m, 1);
  return p;
}

int Polynomial::degree() const {
  int best = -1;
  for (const auto& [m, c] : terms_) {
    best = std::max(best, std::accumulate(m.begin(), m.end(), 0));
  }
  return best;
}

void Polynomial::Add(const Monomial& m, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.num_vars_ != num_vars_) {
    throw Error(ErrorCode::kInvalidArgument, "variable count mismatch");
  }
  for (const auto& [m, c] : other.terms_) Add(m, c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_) {
    throw Error(ErrorCode::kInvalidArgument, "variable count mismatch");
  }
  Polynomial out(a.num_vars_);
  Polynomial::Monomial m(a.num_vars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (int i = 0; i < a.num_vars_; ++i) m[i] = ma[i] + mb[i];
      out.Add(m, ca * cb);
    }
  }
  return out;
}

Polynomial operator*(const BigInt& scalar, const Polynomial& p) {
  Polynomial out(p.num_vars_);
  for (const auto& [m, c] : p.terms_) out.Add(m, scalar * c);
  return out;
}

BigInt Polynomial::Evaluate(std::span<const BigInt> x) const {
  BigInt total = 0;
  for (const auto& [m, c] : terms_) {
    BigInt term = c;
    for (int i = 0; i < num_vars_; ++i) {
      term *= boost::multiprecision::pow(x[i], static_cast<unsigned>(m[i]));
    }
    total += term;
  }
  return total;
}

double Polynomial::Evaluate(std::span<const double> x) const {
  double total = 0;
  for (const auto& [m, c] : terms_) {
    double term = c.convert_to<double>();
    for (int i = 0; i < num_vars_; ++i) term *= std::pow(x[i], m[i]);
    total += term;
  }
  return total;
}

std::vector<double> Polynomial::Gradient(std::span<const double> x) const {
  std::vector<double> grad(num_vars_, 0.0);
  for (const auto& [m, c] : terms_) {
    const double coefficient = c.convert_to<double>();
    for (int j = 0; j < num_vars_; ++j) {
      if (m[j] == 0) continue;
      double term = coefficient * m[j];
      for (int i = 0; i < num_vars_; ++i) {
        term *= std::pow(x[i], i == j ? m[i] - 1 : m[i]);
      }
      grad[j] += term;
    }
  }
  return grad;
}

std::vector<std::vector<double>> Polynomial::Hessian(
    std::span<const double> x) const {
  std::vector<std::vector<double>> hess(num_vars_,
                                        std::vector<double>(num_vars_, 0.0));
  Monomial e;
  for (const auto& [m, c] : terms_) {
    const double coefficient = c.convert_to<double>();
    for (int j = 0; j < num_vars_; ++j) {
      for (int l = j; l < num_vars_; ++l) {
        e = m;
        double factor = coefficient * e[j];
        --e[j];
        factor *= e[l];
        --e[l];
        if (factor == 0) continue;
        for (int i = 0; i < num_vars_; ++i) factor *= std::pow(x[i], e[i]);
        hess[j][l] += factor;
        if (l != j) hess[l][j] += factor;
      }
    }
  }
  return hess;
}

std::string Polynomial::ToString(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string monomial;
    for (int i = 0; i < num_vars_; ++i) {
      if (m[i] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += i < static_cast<int>(names.size()) ? names[i]
                                                     : "x" + std::to_string(i);
      if (m[i] > 1) monomial += "^" + std::to_string(m[i]);
    }
    BigInt magnitude = c < 0 ? BigInt(-c) : c;
    std::string body;
    if (monomial.empty()) {
      body = treematch::ToString(magnitude);
    } else if (magnitude == 1) {
      body = monomial;
    } else {
      body = treematch::ToString(magnitude) + "*" + monomial;
    }
    if (out.empty()) {
      out = c < 0 ? "-" + body : body;
    } else {
      out += c < 0 ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace treematch
