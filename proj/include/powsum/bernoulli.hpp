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

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "powsum/combinatorics.hpp"
#include "powsum/polynomial.hpp"
#include "powsum/rational.hpp"

namespace powsum {

/// Classical Bernoulli numbers B_m, higher-order Bernoulli numbers B_m^(k)
/// by three independent routes, Norlund polynomials (B_m^(k) as a degree-m
/// polynomial in the order k), and Stirling polynomials f_m(k).
///
/// The convolution route reads coefficients straight off the defining
/// series (t/(e^t-1))^k and is the canonical value used by every consumer;
/// the triangular and order-recurrence routes exist so the test suite can
/// check all three against each other.
///
/// Same sharing contract as CombinatorialTables: growth serializes behind
/// a mutex, lookups copy values out, concurrent callers are safe.
class BernoulliFamily {
 public:
  enum class Path { triangular, norlund_recurrence, convolution };

  explicit BernoulliFamily(CombinatorialTables& tables) : tables_(tables) {}

  CombinatorialTables& tables() { return tables_; }

  /// Classical B_m, from sum_{q=0..m} C(m+1,q) B_q = [m = 0].
  /// B_0 = 1, B_1 = -1/2.
  Rational bernoulli(long m) {
    check_nonneg("bernoulli", m);
    std::lock_guard lock(mutex_);
    return classical_unlocked(m);
  }

  /// Canonical B_m^(k): the convolution route.
  Rational higher_bernoulli(long m, long k) {
    return higher_bernoulli(m, k, Path::convolution);
  }

  /// B_m^(k) by an explicitly chosen route. The order recurrence divides
  /// by the order, so Path::norlund_recurrence requires k >= 1.
  Rational higher_bernoulli(long m, long k, Path path) {
    check_nonneg("higher_bernoulli", m);
    if (k < 0) throw std::invalid_argument("higher_bernoulli: k must be nonnegative");
    std::lock_guard lock(mutex_);
    switch (path) {
      case Path::convolution:
        return convolution_unlocked(m, k);
      case Path::triangular:
        return triangular_unlocked(m, k);
      case Path::norlund_recurrence:
        if (k < 1)
          throw std::invalid_argument(
              "higher_bernoulli: norlund_recurrence path requires k >= 1");
        return order_recurrence_unlocked(m, k);
    }
    throw std::logic_error("higher_bernoulli: unknown path");
  }

  /// B_m^(k) as a polynomial in k, of degree exactly m. Built by exact
  /// Lagrange interpolation of the convolution values at k = 0..m; the
  /// k = 0 node pins the polynomial at B_m^(0) = [m = 0].
  RationalPolynomial norlund_polynomial(long m) {
    check_nonneg("norlund_polynomial", m);
    std::lock_guard lock(mutex_);
    return norlund_polynomial_unlocked(m);
  }

  /// Stirling polynomial f_m(k) = C(m+k, m) * B_m^(-k), of degree 2m.
  /// Evaluates to stirling2(m+k, k) at every integer k >= 0.
  RationalPolynomial stirling_polynomial(long m) {
    check_nonneg("stirling_polynomial", m);
    std::lock_guard lock(mutex_);
    auto it = stirling_polys_.find(m);
    if (it != stirling_polys_.end()) return it->second;
    RationalPolynomial f =
        tables_.binomial_poly(m) * norlund_polynomial_unlocked(m).substitute_negated();
    stirling_polys_.emplace(m, f);
    return f;
  }

  /// B_m^(k) evaluated through Stirling numbers of both kinds:
  /// sum_{q=1..m} s(q+k, k) / C(q+k, k) * S(m, q), with the empty sum at
  /// m = 0 defined as 1. Requires k >= 1.
  Rational bernoulli_via_stirling(long m, long k) {
    check_nonneg("bernoulli_via_stirling", m);
    if (k < 1)
      throw std::invalid_argument("bernoulli_via_stirling: k must be positive");
    if (m == 0) return Rational(1);
    Rational acc;
    for (long q = 1; q <= m; ++q) {
      Rational weight(tables_.stirling1_signed(q + k, k), tables_.binomial(q + k, k));
      acc += weight * Rational(tables_.stirling2(m, q));
    }
    return acc;
  }

 private:
  static void check_nonneg(const char* op, long m) {
    if (m < 0) throw std::invalid_argument(std::string(op) + ": m must be nonnegative");
  }

  Rational classical_unlocked(long m) {
    while (static_cast<long>(classical_.size()) <= m) {
      long i = static_cast<long>(classical_.size());
      if (i == 0) {
        classical_.push_back(Rational(1));
        continue;
      }
      Rational acc;
      for (long q = 0; q < i; ++q)
        acc += Rational(tables_.binomial(i + 1, q)) * classical_[q];
      classical_.push_back(-acc / Rational(i + 1));
    }
    return classical_[m];
  }

  // Coefficient extraction from the k-th power of the series
  // sum_q B_q t^q / q!, truncated at degree m. Fills the cache for every
  // q <= m at this order in one pass.
  Rational convolution_unlocked(long m, long k) {
    auto key = std::make_pair(m, k);
    auto it = convolution_values_.find(key);
    if (it != convolution_values_.end()) return it->second;

    std::size_t len = static_cast<std::size_t>(m) + 1;
    std::vector<Rational> base(len);
    for (long q = 0; q <= m; ++q)
      base[q] = classical_unlocked(q) /
                Rational(factorial(static_cast<unsigned long>(q)));

    std::vector<Rational> power(len);
    power[0] = Rational(1);
    for (long i = 0; i < k; ++i) {
      std::vector<Rational> next(len);
      for (std::size_t a = 0; a < len; ++a) {
        if (power[a].is_zero()) continue;
        for (std::size_t b = 0; a + b < len; ++b)
          next[a + b] += power[a] * base[b];
      }
      power = std::move(next);
    }

    for (long q = 0; q <= m; ++q)
      convolution_values_.emplace(
          std::make_pair(q, k),
          power[q] * Rational(factorial(static_cast<unsigned long>(q))));
    return convolution_values_.at(key);
  }

  // Solve sum_{q=0..m} C(m+k,q) S(m+k-q,k) B_q^(k) = [m = 0] for the top
  // term; the q = m coefficient is C(m+k,m) S(k,k) = C(m+k,m).
  Rational triangular_unlocked(long m, long k) {
    auto key = std::make_pair(m, k);
    auto it = triangular_values_.find(key);
    if (it != triangular_values_.end()) return it->second;

    for (long i = 0; i <= m; ++i) {
      auto row_key = std::make_pair(i, k);
      if (triangular_values_.count(row_key)) continue;
      Rational acc;
      for (long q = 0; q < i; ++q)
        acc += Rational(Integer(tables_.binomial(i + k, q) * tables_.stirling2(i + k - q, k))) *
               triangular_values_.at(std::make_pair(q, k));
      Rational delta(i == 0 ? 1 : 0);
      triangular_values_.emplace(row_key,
                                 (delta - acc) / Rational(tables_.binomial(i + k, i)));
    }
    return triangular_values_.at(key);
  }

  // Walk the order up from the classical row via
  // B_n^(ord+1) = ((ord-n)/ord) B_n^(ord) - n B_{n-1}^(ord).
  Rational order_recurrence_unlocked(long m, long k) {
    std::vector<Rational> row(static_cast<std::size_t>(m) + 1);
    for (long n = 0; n <= m; ++n) row[n] = classical_unlocked(n);
    for (long ord = 1; ord < k; ++ord) {
      std::vector<Rational> next(row.size());
      next[0] = Rational(1);
      for (long n = 1; n <= m; ++n)
        next[n] = Rational(ord - n, ord) * row[n] - Rational(n) * row[n - 1];
      row = std::move(next);
    }
    return row[m];
  }

  RationalPolynomial norlund_polynomial_unlocked(long m) {
    auto it = norlund_polys_.find(m);
    if (it != norlund_polys_.end()) return it->second;

    // Exact Lagrange interpolation through (k, B_m^(k)) for k = 0..m.
    RationalPolynomial result("k");
    for (long i = 0; i <= m; ++i) {
      Rational value = convolution_unlocked(m, i);
      if (value.is_zero()) continue;
      RationalPolynomial basis = RationalPolynomial::constant("k", Rational(1));
      Rational denom(1);
      for (long j = 0; j <= m; ++j) {
        if (j == i) continue;
        basis *= RationalPolynomial("k", {Rational(-j), Rational(1)});
        denom *= Rational(i - j);
      }
      result += basis.scaled(value / denom);
    }
    norlund_polys_.emplace(m, result);
    return result;
  }

  CombinatorialTables& tables_;
  std::mutex mutex_;
  std::vector<Rational> classical_;
  std::map<std::pair<long, long>, Rational> convolution_values_;
  std::map<std::pair<long, long>, Rational> triangular_values_;
  std::map<long, RationalPolynomial> norlund_polys_;
  std::map<long, RationalPolynomial> stirling_polys_;
};

}  // namespace powsum
