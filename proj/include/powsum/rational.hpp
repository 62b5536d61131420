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

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace powsum {

/// Arbitrary-precision signed integer. Every integer quantity in the
/// library is exact at any magnitude; there is no floating point anywhere.
using Integer = mpz_class;

/// base^e, with 0^0 = 1 (the convention used by every summation kernel
/// in this library).
inline Integer int_pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// C(n, q) computed directly by GMP. The memoized triangle in
/// CombinatorialTables is built independently by the Pascal recurrence;
/// this direct form serves callers that need a one-off count (and the
/// tests, as an independent oracle).
inline Integer binomial_direct(unsigned long n, unsigned long q) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, q);
  return r;
}

/// Exact rational scalar, always in lowest terms with a positive
/// denominator; zero is 0/1. Division by zero throws std::domain_error,
/// never produces a sentinel. Values are immutable in spirit: every
/// operation returns a fresh canonical value.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}              // NOLINT: implicit by design
  Rational(const Integer& n) : value_(n) {}    // NOLINT: implicit by design
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return value_ == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational operator+(const Rational& o) const { return Rational(mpq_class(value_ + o.value_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(value_ - o.value_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(value_ * o.value_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(value_ / o.value_));
  }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  Rational reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    return Rational(denominator(), numerator());
  }

  bool operator==(const Rational& o) const { return value_ == o.value_; }
  bool operator!=(const Rational& o) const { return value_ != o.value_; }
  bool operator<(const Rational& o) const { return value_ < o.value_; }
  bool operator<=(const Rational& o) const { return value_ <= o.value_; }
  bool operator>(const Rational& o) const { return value_ > o.value_; }
  bool operator>=(const Rational& o) const { return value_ >= o.value_; }

  /// Canonical serialization: "p/q", or just "p" when q = 1.
  std::string str() const { return value_.get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.value_;
  }

  friend Rational abs(const Rational& r) {
    return r.sign() < 0 ? -r : r;
  }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;  // kept canonical at all times
};

}  // namespace powsum
