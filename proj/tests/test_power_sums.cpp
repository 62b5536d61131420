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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "powsum/power_sums.hpp"

using powsum::BernoulliFamily;
using powsum::CombinatorialTables;
using powsum::Integer;
using powsum::PowerSumQuery;
using powsum::Rational;
using powsum::RationalPolynomial;

namespace {

struct Fixture {
  CombinatorialTables tables;
  BernoulliFamily family{tables};
};

RationalPolynomial npoly(std::vector<Rational> coeffs) {
  return RationalPolynomial("n", std::move(coeffs));
}

// The six reference power-sum polynomials, written out with their
// k-dependent coefficient formulas and instantiated at a concrete order.
RationalPolynomial reference_powersum(long m, long k) {
  RationalPolynomial nk = RationalPolynomial::monomial("n", static_cast<std::size_t>(k),
                                                       Rational(1));
  RationalPolynomial np1 = npoly({Rational(1), Rational(1)});
  Rational kk(k);
  auto cubic = [&](long a, long b, long c, long d) {
    return Rational(a) * kk * kk * kk + Rational(b) * kk * kk + Rational(c) * kk +
           Rational(d);
  };
  switch (m) {
    case 0:
      return nk;
    case 1:
      return (nk * np1).scaled(kk / Rational(2));
    case 2: {
      RationalPolynomial inner =
          npoly({Rational(3) * kk - Rational(1), Rational(3) * kk + Rational(1)});
      return (nk * np1 * inner).scaled(kk / Rational(12));
    }
    case 3: {
      RationalPolynomial inner = npoly({kk - Rational(1), kk + Rational(1)});
      return (nk * np1 * np1 * inner).scaled(kk * kk / Rational(8));
    }
    case 4: {
      RationalPolynomial inner = npoly({cubic(15, -30, 5, 2), cubic(45, -30, -5, -2),
                                        cubic(45, 30, -5, 2), cubic(15, 30, 5, -2)});
      return (nk * np1 * inner).scaled(kk / Rational(240));
    }
    case 5: {
      RationalPolynomial inner = npoly({cubic(3, -10, 5, 2), cubic(9, -10, -5, -2),
                                        cubic(9, 10, -5, 2), cubic(3, 10, 5, -2)});
      return (nk * np1 * np1 * inner).scaled(kk * kk / Rational(96));
    }
    default:
      REQUIRE(false);
      return RationalPolynomial("n");
  }
}

}  // namespace

TEST_CASE("literal power sums") {
  CHECK(powsum::power_sum(0, 7) == 7);
  CHECK(powsum::power_sum(2, 3) == 14);
  CHECK(powsum::power_sum(3, 4) == 100);
  CHECK_THROWS_AS(powsum::power_sum(1, 0), std::invalid_argument);
}

TEST_CASE("classical closed form") {
  Fixture f;
  CHECK(powsum::faulhaber_poly(f.family, 0) == npoly({Rational(0), Rational(1)}));
  CHECK(powsum::faulhaber_poly(f.family, 1) ==
        npoly({Rational(0), Rational(1, 2), Rational(1, 2)}));
  CHECK(powsum::faulhaber_poly(f.family, 2).eval(Rational(3)) == Rational(14));

  for (long m = 0; m <= 10; ++m) {
    RationalPolynomial p = powsum::faulhaber_poly(f.family, m);
    for (long n = 1; n <= 12; ++n)
      CHECK(p.eval(Rational(n)) == Rational(powsum::power_sum(m, n)));
  }
}

TEST_CASE("brute-force higher power sums") {
  Fixture f;
  CHECK(powsum::higher_power_sum(f.tables, 0, 3, 2) == 8);
  CHECK(powsum::higher_power_sum(f.tables, 1, 2, 3) == 36);
  CHECK(powsum::higher_power_sum(f.tables, 1, 1, 5) == 15);

  // order 1 collapses to the literal sum
  for (long m = 0; m <= 8; ++m)
    for (long n = 1; n <= 8; ++n)
      CHECK(powsum::higher_power_sum(f.tables, m, 1, n) == powsum::power_sum(m, n));

  // power 0 collapses to the row sum n^k
  for (long k = 1; k <= 6; ++k)
    for (long n = 1; n <= 6; ++n)
      CHECK(powsum::higher_power_sum(f.tables, 0, k, n) ==
            powsum::int_pow(Integer(n), static_cast<unsigned long>(k)));
}

TEST_CASE("higher closed form: first members") {
  Fixture f;
  CHECK(powsum::higher_faulhaber_poly(f.family, 0, 3) ==
        RationalPolynomial::monomial("n", 3, Rational(1)));
  // order 2, power 1: n^2 (n + 1)
  CHECK(powsum::higher_faulhaber_poly(f.family, 1, 2) ==
        npoly({Rational(0), Rational(0), Rational(1), Rational(1)}));
  CHECK(powsum::higher_faulhaber_poly(f.family, 2, 1) ==
        npoly({Rational(0), Rational(1, 6), Rational(1, 2), Rational(1, 3)}));
}

TEST_CASE("order 1 closed form reduces to the classical one") {
  Fixture f;
  for (long m = 0; m <= 12; ++m)
    CHECK(powsum::higher_faulhaber_poly(f.family, m, 1) ==
          powsum::faulhaber_poly(f.family, m));
}

TEST_CASE("divisibility by n^k and by (n + 1)") {
  Fixture f;
  for (long m = 0; m <= 8; ++m)
    for (long k = 1; k <= 5; ++k) {
      RationalPolynomial p = powsum::higher_faulhaber_poly(f.family, m, k);
      for (long e = 0; e < k; ++e) CHECK(p.coefficient(e).is_zero());
      if (m >= 1) CHECK(p.eval(Rational(-1)).is_zero());
    }
}

TEST_CASE("theorem instances") {
  Fixture f;
  powsum::IdentityReport r = powsum::theorem_check(f.family, {1, 2, 3});
  CHECK(r.holds);
  CHECK(std::get<Rational>(r.lhs) == Rational(36));
  CHECK(std::get<Rational>(r.rhs) == Rational(36));

  r = powsum::theorem_check(f.family, {0, 5, 4});
  CHECK(r.holds);
  CHECK(std::get<Rational>(r.lhs) == Rational(1024));

  r = powsum::theorem_check(f.family, {4, 2, 2});
  CHECK(r.holds);
  CHECK(std::get<Rational>(r.lhs) == Rational(434));
}

TEST_CASE("theorem sweep at unit-test scale") {
  Fixture f;
  for (long m = 0; m <= 6; ++m)
    for (long k = 1; k <= 4; ++k)
      for (long n = 1; n <= 6; ++n)
        CHECK(powsum::theorem_check(f.family, {m, k, n}).holds);
}

TEST_CASE("reference polynomial table, all orders 1..6") {
  Fixture f;
  for (long m = 0; m <= 5; ++m)
    for (long k = 1; k <= 6; ++k)
      CHECK(powsum::higher_faulhaber_poly(f.family, m, k) == reference_powersum(m, k));
}

TEST_CASE("desk-scale bounds are advice, not limits") {
  CHECK(powsum::exceeds_bounds(PowerSumQuery{17, 1, 1}));
  CHECK(powsum::exceeds_bounds(PowerSumQuery{1, 9, 1}));
  CHECK(powsum::exceeds_bounds(PowerSumQuery{1, 1, 51}));
  CHECK(!powsum::exceeds_bounds(PowerSumQuery{16, 8, 50}));

  Fixture f;
  CHECK(powsum::theorem_check(f.family, {17, 2, 3}).holds);  // proceeds anyway
}
