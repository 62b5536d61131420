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

#include "powsum/power_sums.hpp"
#include "powsum/report.hpp"

namespace powsum {

// Exact verifiers for the recurrence identities relating Bernoulli numbers,
// Stirling numbers and power sums. Each returns an IdentityReport with
// both sides computed from independent ingredients; where a relation could
// be made tautological by reusing the values it defines (the triangular
// Bernoulli solvers), the verifier deliberately takes its Bernoulli
// numbers from the convolution route instead.

/// id "rec-rel": sum_{q=0..m} C(m+1,q) B_q = [m = 0].
inline IdentityReport verify_bernoulli_recurrence(BernoulliFamily& family, long m) {
  if (m < 0) throw std::invalid_argument("verify_bernoulli_recurrence: m must be nonnegative");
  CombinatorialTables& tables = family.tables();
  Rational lhs;
  for (long q = 0; q <= m; ++q)
    lhs += Rational(tables.binomial(m + 1, q)) *
           family.higher_bernoulli(q, 1, BernoulliFamily::Path::convolution);
  IdentityReport report =
      IdentityReport::scalar("rec-rel", {{"m", m}}, lhs, Rational(m == 0 ? 1 : 0));
  report.method = "convolution-route Bernoulli numbers";
  return report;
}

/// id "rec-rel1":
///   sum_{q=0..m} C(m+k,q) S(m+k-q,k) B_q = ((m+k)/k) S(m+k-1,k-1), k >= 1.
inline IdentityReport verify_stirling_weighted_recurrence(BernoulliFamily& family,
                                                          long m, long k) {
  if (m < 0) throw std::invalid_argument("verify_stirling_weighted_recurrence: m must be nonnegative");
  if (k < 1) throw std::invalid_argument("verify_stirling_weighted_recurrence: k must be positive");
  CombinatorialTables& tables = family.tables();
  Rational lhs;
  for (long q = 0; q <= m; ++q)
    lhs += Rational(Integer(tables.binomial(m + k, q) * tables.stirling2(m + k - q, k))) *
           family.bernoulli(q);
  Rational rhs = Rational(m + k, k) * Rational(tables.stirling2(m + k - 1, k - 1));
  return IdentityReport::scalar("rec-rel1", {{"m", m}, {"k", k}}, lhs, rhs);
}

/// id "impl": sum_{q=0..m} C(m+k,q) S(m+k-q,k) B_q^(k) = [m = 0], with the
/// B_q^(k) taken from the convolution route so the check is independent of
/// the triangular solver.
inline IdentityReport verify_higher_recurrence(BernoulliFamily& family, long m, long k) {
  if (m < 0) throw std::invalid_argument("verify_higher_recurrence: m must be nonnegative");
  if (k < 0) throw std::invalid_argument("verify_higher_recurrence: k must be nonnegative");
  CombinatorialTables& tables = family.tables();
  Rational lhs;
  for (long q = 0; q <= m; ++q)
    lhs += Rational(Integer(tables.binomial(m + k, q) * tables.stirling2(m + k - q, k))) *
           family.higher_bernoulli(q, k, BernoulliFamily::Path::convolution);
  IdentityReport report = IdentityReport::scalar("impl", {{"m", m}, {"k", k}}, lhs,
                                                 Rational(m == 0 ? 1 : 0));
  report.method = "convolution-route Bernoulli numbers";
  return report;
}

/// id "impl1": the general relation covering both of the above,
///   sum_{q=0..m} C(m+k,q) S(m+k-q,k) B_q^(r)
///     = C(m+k,k)/C(m+k-r,k-r) * S(m+k-r,k-r),  k >= r >= 1.
/// r = 1 reproduces "rec-rel1", r = k reproduces "impl".
inline IdentityReport verify_general_relation(BernoulliFamily& family,
                                              long m, long k, long r) {
  if (m < 0) throw std::invalid_argument("verify_general_relation: m must be nonnegative");
  if (r < 1) throw std::invalid_argument("verify_general_relation: r must be positive");
  if (k < r) throw std::invalid_argument("verify_general_relation: requires k >= r");
  CombinatorialTables& tables = family.tables();
  Rational lhs;
  for (long q = 0; q <= m; ++q)
    lhs += Rational(Integer(tables.binomial(m + k, q) * tables.stirling2(m + k - q, k))) *
           family.higher_bernoulli(q, r, BernoulliFamily::Path::convolution);
  Rational rhs = Rational(tables.binomial(m + k, k), tables.binomial(m + k - r, k - r)) *
                 Rational(tables.stirling2(m + k - r, k - r));
  IdentityReport report =
      IdentityReport::scalar("impl1", {{"m", m}, {"k", k}, {"r", r}}, lhs, rhs);
  report.method = "convolution-route Bernoulli numbers";
  return report;
}

enum class RPath { definition, closed_form };

/// The auxiliary polynomial R_m^(k,r)(n), k >= r >= 1, by either route:
///   definition:  sum_{q=0..m} (-1)^q C(m+k,q) S(m+k-q,k) * Shat_q^(r)(n)
///   closed_form: (1/C(k,r)) sum_{j=0..m} (-1)^j C(m+k, m+k-r-j)
///                  * S(m+k-r-j, k-r) * S(r+j, r) * n^(r+j)
/// Both produce the same polynomial; at k = r the closed form collapses to
/// the single monomial (-1)^m S(m+k,k) n^(m+k).
inline RationalPolynomial r_polynomial(BernoulliFamily& family,
                                       long m, long k, long r, RPath path) {
  if (m < 0) throw std::invalid_argument("r_polynomial: m must be nonnegative");
  if (r < 1) throw std::invalid_argument("r_polynomial: r must be positive");
  if (k < r) throw std::invalid_argument("r_polynomial: requires k >= r");
  CombinatorialTables& tables = family.tables();

  if (path == RPath::definition) {
    RationalPolynomial acc("n");
    for (long q = 0; q <= m; ++q) {
      Rational weight(Integer(tables.binomial(m + k, q) * tables.stirling2(m + k - q, k)));
      if (q % 2 != 0) weight = -weight;
      acc += higher_faulhaber_poly(family, q, r).scaled(weight);
    }
    return acc;
  }

  std::vector<Rational> coeffs(static_cast<std::size_t>(m + r) + 1);
  for (long j = 0; j <= m; ++j) {
    Rational term(Integer(tables.binomial(m + k, m + k - r - j) *
                          tables.stirling2(m + k - r - j, k - r) *
                          tables.stirling2(r + j, r)));
    if (j % 2 != 0) term = -term;
    coeffs[r + j] = term;
  }
  return RationalPolynomial("n", std::move(coeffs))
      .scaled(Rational(Integer(1), tables.binomial(k, r)));
}

/// id "le2": the two routes to R_m^(k,r) agree as exact polynomials.
inline IdentityReport verify_r_polynomial(BernoulliFamily& family, long m, long k, long r) {
  return IdentityReport::polynomial(
      "le2", {{"m", m}, {"k", k}, {"r", r}},
      r_polynomial(family, m, k, r, RPath::definition),
      r_polynomial(family, m, k, r, RPath::closed_form));
}

/// id "rec-rel2": at k = r the closed form is the single monomial
/// (-1)^m S(m+k,k) n^(m+k).
inline IdentityReport verify_r_polynomial_diagonal(BernoulliFamily& family, long m, long k) {
  Rational coeff(family.tables().stirling2(m + k, k));
  if (m % 2 != 0) coeff = -coeff;
  RationalPolynomial monomial =
      RationalPolynomial::monomial("n", static_cast<std::size_t>(m + k), coeff);
  return IdentityReport::polynomial(
      "rec-rel2", {{"m", m}, {"k", k}},
      r_polynomial(family, m, k, k, RPath::closed_form), monomial);
}

/// id "le3": the brute-force sums satisfy the same relation as the
/// polynomials:
///   sum_{q=0..m} (-1)^q C(m+k,q) S(m+k-q,k) S_q^(r)(n) = R_m^(k,r)(n),
/// with the left side built from literal higher power sums and the right
/// side the closed form evaluated at n.
inline IdentityReport verify_sum_identity(BernoulliFamily& family,
                                          long m, long k, long r, long n) {
  if (m < 0) throw std::invalid_argument("verify_sum_identity: m must be nonnegative");
  if (r < 1) throw std::invalid_argument("verify_sum_identity: r must be positive");
  if (k < r) throw std::invalid_argument("verify_sum_identity: requires k >= r");
  if (n < 1) throw std::invalid_argument("verify_sum_identity: n must be positive");
  CombinatorialTables& tables = family.tables();
  Rational lhs;
  for (long q = 0; q <= m; ++q) {
    Rational term = Rational(Integer(tables.binomial(m + k, q) * tables.stirling2(m + k - q, k))) *
                    Rational(higher_power_sum(tables, q, r, n));
    if (q % 2 != 0) term = -term;
    lhs += term;
  }
  Rational rhs = r_polynomial(family, m, k, r, RPath::closed_form).eval(Rational(n));
  return IdentityReport::scalar("le3", {{"m", m}, {"k", k}, {"r", r}, {"n", n}},
                                lhs, rhs);
}

}  // namespace powsum
