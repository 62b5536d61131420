/*
   Copyright 2026 The powsum Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "powsum/rational.hpp"

namespace powsum {

/// Dense univariate polynomial over Rational.
///
/// The indeterminate name ("n", "k", ...) is part of the value and is
/// checked at every binary operation; mixing variables throws
/// std::invalid_argument instead of silently producing a wrong identity.
/// The coefficient vector never carries trailing zeros; the zero
/// polynomial is the empty vector and has no degree.
class RationalPolynomial {
 public:
  explicit RationalPolynomial(std::string variable) : var_(std::move(variable)) {}

  RationalPolynomial(std::string variable, std::vector<Rational> coeffs)
      : var_(std::move(variable)), coeffs_(std::move(coeffs)) {
    normalize();
  }

  static RationalPolynomial constant(std::string variable, const Rational& c) {
    return RationalPolynomial(std::move(variable), {c});
  }

  static RationalPolynomial monomial(std::string variable, std::size_t exponent,
                                     const Rational& c) {
    std::vector<Rational> coeffs(exponent + 1);
    coeffs[exponent] = c;
    return RationalPolynomial(std::move(variable), std::move(coeffs));
  }

  const std::string& variable() const { return var_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Degree, or nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  /// Coefficient of variable^exponent; zero beyond the degree.
  Rational coefficient(std::size_t exponent) const {
    return exponent < coeffs_.size() ? coeffs_[exponent] : Rational(0);
  }

  RationalPolynomial operator+(const RationalPolynomial& o) const {
    require_same_variable(o);
    std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = coefficient(i) + o.coefficient(i);
    return RationalPolynomial(var_, std::move(out));
  }

  RationalPolynomial operator-(const RationalPolynomial& o) const {
    require_same_variable(o);
    std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = coefficient(i) - o.coefficient(i);
    return RationalPolynomial(var_, std::move(out));
  }

  RationalPolynomial operator*(const RationalPolynomial& o) const {
    require_same_variable(o);
    if (is_zero() || o.is_zero()) return RationalPolynomial(var_);
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
        out[i + j] += coeffs_[i] * o.coeffs_[j];
    return RationalPolynomial(var_, std::move(out));
  }

  RationalPolynomial operator-() const { return scaled(Rational(-1)); }

  RationalPolynomial& operator+=(const RationalPolynomial& o) { return *this = *this + o; }
  RationalPolynomial& operator-=(const RationalPolynomial& o) { return *this = *this - o; }
  RationalPolynomial& operator*=(const RationalPolynomial& o) { return *this = *this * o; }

  RationalPolynomial scaled(const Rational& s) const {
    if (s.is_zero()) return RationalPolynomial(var_);
    std::vector<Rational> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * s;
    return RationalPolynomial(var_, std::move(out));
  }

  /// Exact Horner evaluation.
  Rational eval(const Rational& x) const {
    Rational acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  /// p(x) -> p(-x): the coefficient of x^j picks up (-1)^j.
  RationalPolynomial substitute_negated() const {
    std::vector<Rational> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      out[i] = (i % 2 == 0) ? coeffs_[i] : -coeffs_[i];
    return RationalPolynomial(var_, std::move(out));
  }

  /// p(x) -> p(x + delta), by Horner over the linear factor.
  RationalPolynomial shifted(const Rational& delta) const {
    RationalPolynomial linear(var_, {delta, Rational(1)});
    RationalPolynomial acc(var_);
    for (std::size_t i = coeffs_.size(); i-- > 0;)
      acc = acc * linear + constant(var_, coeffs_[i]);
    return acc;
  }

  bool operator==(const RationalPolynomial& o) const {
    return var_ == o.var_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const RationalPolynomial& o) const { return !(*this == o); }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  void require_same_variable(const RationalPolynomial& o) const {
    if (var_ != o.var_)
      throw std::invalid_argument("RationalPolynomial: indeterminate mismatch: " +
                                  var_ + " vs " + o.var_);
  }

  std::string var_;
  std::vector<Rational> coeffs_;  // index = exponent, no trailing zeros
};

}  // namespace powsum
