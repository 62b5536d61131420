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

#include <stdexcept>
#include <string>
#include <vector>

#include "powsum/bernoulli.hpp"
#include "powsum/combinatorics.hpp"
#include "powsum/report.hpp"

namespace powsum {

/// S_m(n) = 1^m + 2^m + ... + n^m by literal summation.
inline Integer power_sum(long m, long n) {
  if (m < 0) throw std::invalid_argument("power_sum: m must be nonnegative");
  if (n < 1) throw std::invalid_argument("power_sum: n must be positive");
  Integer acc(0);
  for (long q = 1; q <= n; ++q)
    acc += int_pow(Integer(q), static_cast<unsigned long>(m));
  return acc;
}

/// The closed-form polynomial in n whose value at each positive integer n
/// is power_sum(m, n):
///   (1/(m+1)) sum_{q=0..m} (-1)^q C(m+1,q) B_q n^(m+1-q).
inline RationalPolynomial faulhaber_poly(BernoulliFamily& family, long m) {
  if (m < 0) throw std::invalid_argument("faulhaber_poly: m must be nonnegative");
  CombinatorialTables& tables = family.tables();
  std::vector<Rational> coeffs(static_cast<std::size_t>(m) + 2);
  for (long q = 0; q <= m; ++q) {
    Rational term = Rational(tables.binomial(m + 1, q)) * family.bernoulli(q);
    if (q % 2 != 0) term = -term;
    coeffs[m + 1 - q] = term;
  }
  return RationalPolynomial("n", std::move(coeffs))
      .scaled(Rational(1, m + 1));
}

/// Higher-order power sum by brute force over the extended binomial row:
///   S_m^(k)(n) = sum_{q=0..k(n-1)} row_q * (k+q)^m
/// where row is the coefficient row of (1 + t + ... + t^(n-1))^k.
/// For m = 0 this collapses to the row sum n^k.
inline Integer higher_power_sum(CombinatorialTables& tables, long m, long k, long n) {
  if (m < 0) throw std::invalid_argument("higher_power_sum: m must be nonnegative");
  if (k < 1) throw std::invalid_argument("higher_power_sum: k must be positive");
  if (n < 1) throw std::invalid_argument("higher_power_sum: n must be positive");
  std::vector<Integer> row = tables.extended_binomial_row(k, n);
  Integer acc(0);
  for (std::size_t q = 0; q < row.size(); ++q)
    acc += row[q] * int_pow(Integer(k + static_cast<long>(q)),
                            static_cast<unsigned long>(m));
  return acc;
}

/// The order-k analogue of faulhaber_poly:
///   (1/C(m+k,k)) sum_{q=0..m} (-1)^q C(m+k,q) B_q^(k) S(m+k-q,k) n^(m+k-q).
/// The sum stops at q = m, so every power of n below n^k has a zero
/// coefficient.
inline RationalPolynomial higher_faulhaber_poly(BernoulliFamily& family, long m, long k) {
  if (m < 0) throw std::invalid_argument("higher_faulhaber_poly: m must be nonnegative");
  if (k < 1) throw std::invalid_argument("higher_faulhaber_poly: k must be positive");
  CombinatorialTables& tables = family.tables();
  std::vector<Rational> coeffs(static_cast<std::size_t>(m + k) + 1);
  for (long q = 0; q <= m; ++q) {
    Rational term = Rational(Integer(tables.binomial(m + k, q) * tables.stirling2(m + k - q, k))) *
                    family.higher_bernoulli(q, k);
    if (q % 2 != 0) term = -term;
    coeffs[m + k - q] = term;
  }
  return RationalPolynomial("n", std::move(coeffs))
      .scaled(Rational(Integer(1), tables.binomial(m + k, k)));
}

/// One instance of the power-sum equality to check: power m, order k,
/// range n.
struct PowerSumQuery {
  long m = 0;
  long k = 1;
  long n = 1;
};

/// Desk-scale guidance, not hard limits. Queries beyond these bounds are
/// legal; callers that care (the CLI) warn about runtime and proceed.
struct PowerSumBounds {
  long m_max = 16;
  long k_max = 8;
  long n_max = 50;
};

inline bool exceeds_bounds(const PowerSumQuery& q, const PowerSumBounds& b = {}) {
  return q.m > b.m_max || q.k > b.k_max || q.n > b.n_max;
}

/// Evaluate the closed-form polynomial at n and compare it exactly with
/// the brute-force sum.
inline IdentityReport theorem_check(BernoulliFamily& family, const PowerSumQuery& query) {
  Rational brute(higher_power_sum(family.tables(), query.m, query.k, query.n));
  Rational closed =
      higher_faulhaber_poly(family, query.m, query.k).eval(Rational(query.n));
  return IdentityReport::scalar(
      "theorem", {{"m", query.m}, {"k", query.k}, {"n", query.n}}, brute, closed);
}

}  // namespace powsum
