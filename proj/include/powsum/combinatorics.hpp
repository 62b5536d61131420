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
#include <string>
#include <utility>
#include <vector>

#include "powsum/polynomial.hpp"
#include "powsum/rational.hpp"

namespace powsum {

/// Memoized exact combinatorial tables: the Pascal triangle, Stirling
/// numbers of both kinds (the first kind stored signed), harmonic numbers,
/// and the coefficient rows of (1 + t + ... + t^(n-1))^k.
///
/// Tables grow on demand and are never evicted. Growth is serialized
/// behind an internal mutex and lookups copy values out, so any number of
/// threads may call into one instance concurrently.
class CombinatorialTables {
 public:
  /// C(n, q); zero when q < 0 or q > n.
  Integer binomial(long n, long q) {
    if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
    if (q < 0 || q > n) return 0;
    std::lock_guard lock(mutex_);
    grow_binomial(n);
    return binomial_rows_[n][q];
  }

  /// Stirling number of the second kind S(n, k): partitions of an n-set
  /// into k nonempty blocks. S(0,0) = 1, S(n,0) = 0 for n > 0, and
  /// S(n,k) = 0 for k > n.
  Integer stirling2(long n, long k) {
    check_pair("stirling2", n, k);
    if (k > n) return 0;
    std::lock_guard lock(mutex_);
    grow_stirling2(n);
    return stirling2_rows_[n][k];
  }

  /// Signed Stirling number of the first kind s(n, k): the coefficient of
  /// x^k in the falling factorial x(x-1)...(x-n+1). Carries the sign
  /// (-1)^(n-k).
  Integer stirling1_signed(long n, long k) {
    check_pair("stirling1_signed", n, k);
    if (k > n) return 0;
    std::lock_guard lock(mutex_);
    grow_stirling1(n);
    return stirling1_rows_[n][k];
  }

  /// H_m = 1 + 1/2 + ... + 1/m, exact. Requires m >= 1.
  Rational harmonic(long m) {
    if (m < 1) throw std::invalid_argument("harmonic: m must be positive");
    std::lock_guard lock(mutex_);
    while (static_cast<long>(harmonic_.size()) < m) {
      long next = static_cast<long>(harmonic_.size()) + 1;
      Rational prev = harmonic_.empty() ? Rational(0) : harmonic_.back();
      harmonic_.push_back(prev + Rational(1, next));
    }
    return harmonic_[m - 1];
  }

  /// Coefficients c_q, q = 0..k(n-1), of (1 + t + ... + t^(n-1))^k.
  /// Row indexing is 0-based in the exponent of t; the row sums to n^k.
  std::vector<Integer> extended_binomial_row(long k, long n) {
    if (k < 0) throw std::invalid_argument("extended_binomial_row: k must be nonnegative");
    if (n < 1) throw std::invalid_argument("extended_binomial_row: n must be positive");
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(k, n);
    auto it = extended_rows_.find(key);
    if (it != extended_rows_.end()) return it->second;

    std::vector<Integer> row{Integer(1)};
    std::vector<Integer> base(static_cast<std::size_t>(n), Integer(1));
    for (long i = 0; i < k; ++i) {
      std::vector<Integer> next(row.size() + base.size() - 1, Integer(0));
      for (std::size_t a = 0; a < row.size(); ++a)
        for (std::size_t b = 0; b < base.size(); ++b)
          next[a + b] += row[a] * base[b];
      row = std::move(next);
    }
    extended_rows_.emplace(key, row);
    return row;
  }

  /// The degree-m polynomial (k+1)(k+2)...(k+m)/m! in the variable "k".
  /// Agrees with binomial(m+k, m) at every nonnegative integer k.
  RationalPolynomial binomial_poly(long m) {
    if (m < 0) throw std::invalid_argument("binomial_poly: m must be nonnegative");
    std::lock_guard lock(mutex_);
    auto it = binomial_polys_.find(m);
    if (it != binomial_polys_.end()) return it->second;

    RationalPolynomial p = RationalPolynomial::constant("k", Rational(1));
    for (long j = 1; j <= m; ++j)
      p *= RationalPolynomial("k", {Rational(j), Rational(1)});
    p = p.scaled(Rational(Integer(1), factorial(static_cast<unsigned long>(m))));
    binomial_polys_.emplace(m, p);
    return p;
  }

  /// Fault-injection hook for the verification-harness tests: overwrite a
  /// stored stirling2 entry so downstream identity checks must fail.
  void inject_stirling2(long n, long k, Integer value) {
    check_pair("inject_stirling2", n, k);
    if (k > n) throw std::invalid_argument("inject_stirling2: k must be <= n");
    std::lock_guard lock(mutex_);
    grow_stirling2(n);
    stirling2_rows_[n][k] = std::move(value);
  }

 private:
  static void check_pair(const char* op, long n, long k) {
    if (n < 0 || k < 0)
      throw std::invalid_argument(std::string(op) + ": arguments must be nonnegative");
  }

  void grow_binomial(long n) {
    while (static_cast<long>(binomial_rows_.size()) <= n) {
      std::size_t r = binomial_rows_.size();
      std::vector<Integer> row(r + 1, Integer(1));
      for (std::size_t q = 1; q < r; ++q)
        row[q] = binomial_rows_[r - 1][q - 1] + binomial_rows_[r - 1][q];
      binomial_rows_.push_back(std::move(row));
    }
  }

  void grow_stirling2(long n) {
    if (stirling2_rows_.empty()) stirling2_rows_.push_back({Integer(1)});  // S(0,0)
    while (static_cast<long>(stirling2_rows_.size()) <= n) {
      std::size_t r = stirling2_rows_.size();
      std::vector<Integer> row(r + 1, Integer(0));
      for (std::size_t k = 1; k <= r; ++k) {
        Integer up = (k < r) ? stirling2_rows_[r - 1][k] : Integer(0);
        row[k] = stirling2_rows_[r - 1][k - 1] + Integer(static_cast<long>(k)) * up;
      }
      stirling2_rows_.push_back(std::move(row));
    }
  }

  void grow_stirling1(long n) {
    if (stirling1_rows_.empty()) stirling1_rows_.push_back({Integer(1)});  // s(0,0)
    while (static_cast<long>(stirling1_rows_.size()) <= n) {
      std::size_t r = stirling1_rows_.size();
      std::vector<Integer> row(r + 1, Integer(0));
      for (std::size_t k = 1; k <= r; ++k) {
        Integer up = (k < r) ? stirling1_rows_[r - 1][k] : Integer(0);
        row[k] = stirling1_rows_[r - 1][k - 1] - Integer(static_cast<long>(r - 1)) * up;
      }
      stirling1_rows_.push_back(std::move(row));
    }
  }

  std::mutex mutex_;
  std::vector<std::vector<Integer>> binomial_rows_;
  std::vector<std::vector<Integer>> stirling2_rows_;
  std::vector<std::vector<Integer>> stirling1_rows_;
  std::vector<Rational> harmonic_;
  std::map<std::pair<long, long>, std::vector<Integer>> extended_rows_;
  std::map<long, RationalPolynomial> binomial_polys_;
};

}  // namespace powsum
