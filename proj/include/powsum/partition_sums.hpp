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

#include "powsum/power_sums.hpp"
#include "powsum/report.hpp"

namespace powsum {

/// Default cap on the number of tuples one enumeration may visit.
inline constexpr long kDefaultEnumerationBudget = 10'000'000;

/// Number of nondecreasing k-tuples with entries in [1, kn]:
/// C(kn + k - 1, k).
inline Integer multiset_count(long k, long n) {
  if (k < 1) throw std::invalid_argument("multiset_count: k must be positive");
  if (n < 1) throw std::invalid_argument("multiset_count: n must be positive");
  return binomial_direct(static_cast<unsigned long>(k * n + k - 1),
                         static_cast<unsigned long>(k));
}

/// Visit every nondecreasing k-tuple 1 <= x_1 <= ... <= x_k <= kn in
/// lexicographic order, without materializing the list. Throws before
/// visiting anything if the tuple count exceeds the budget; the error
/// names the count.
template <typename Visitor>
void enumerate_multisets(long k, long n, Visitor&& visit,
                         long budget = kDefaultEnumerationBudget) {
  Integer count = multiset_count(k, n);
  if (count > budget)
    throw std::runtime_error("enumerate_multisets: " + count.get_str() +
                             " tuples exceed the budget of " + std::to_string(budget));
  long top = k * n;
  std::vector<long> tuple(static_cast<std::size_t>(k), 1);
  while (true) {
    visit(const_cast<const std::vector<long>&>(tuple));
    long j = k - 1;
    while (j >= 0 && tuple[j] == top) --j;
    if (j < 0) break;
    long v = tuple[j] + 1;
    for (long i = j; i < k; ++i) tuple[i] = v;
  }
}

/// The sums over the multiset lattice of nondecreasing k-tuples in
/// [1, kn]. Each tuple contributes the k component values
/// v_j = x_j - (j-1)n; a component adds sign(v_j) at index |v_j| of the
/// signed coefficient vector (a zero component adds +1 at index 0). The
/// vector is cached per (k, n) because every power m reuses it.
class PartitionSums {
 public:
  explicit PartitionSums(CombinatorialTables& tables) : tables_(tables) {}

  /// Signed coefficients c_q, q = 0..kn. For every m (with 0^0 = 1),
  /// sum_q c_q q^m equals script_sum(m, k, n).
  std::vector<Integer> signed_coefficients(long k, long n,
                                           long budget = kDefaultEnumerationBudget) {
    std::lock_guard lock(mutex_);
    return coefficients_unlocked(k, n, budget);
  }

  /// The lattice sum itself, evaluated through the cached coefficients.
  Integer script_sum(long m, long k, long n,
                     long budget = kDefaultEnumerationBudget) {
    if (m < 0) throw std::invalid_argument("script_sum: m must be nonnegative");
    std::lock_guard lock(mutex_);
    const std::vector<Integer>& c = coefficients_unlocked(k, n, budget);
    Integer acc(0);
    for (std::size_t q = 0; q < c.size(); ++q)
      acc += c[q] * int_pow(Integer(static_cast<long>(q)),
                            static_cast<unsigned long>(m));
    return acc;
  }

  /// script_sum(m,k,n) - sum_{q=0..k-1} C(k(n+1), q) S_m^(k-q)(n).
  /// Exact calculation shows this equals c_0(k,n) when m = 0 and vanishes
  /// for every m >= 1.
  Integer conjecture_residual(long m, long k, long n,
                              long budget = kDefaultEnumerationBudget) {
    Integer lattice = script_sum(m, k, n, budget);
    Integer expansion(0);
    for (long q = 0; q < k; ++q)
      expansion += tables_.binomial(k * (n + 1), q) *
                   higher_power_sum(tables_, m, k - q, n);
    return lattice - expansion;
  }

  /// Report form of the residual check: the right side carries the
  /// predicted correction c_0(k,n)*[m = 0], so `holds` keeps its usual
  /// meaning (zero residual).
  IdentityReport conjecture_check(long m, long k, long n,
                                  long budget = kDefaultEnumerationBudget) {
    Integer lattice = script_sum(m, k, n, budget);
    Integer expansion(0);
    for (long q = 0; q < k; ++q)
      expansion += tables_.binomial(k * (n + 1), q) *
                   higher_power_sum(tables_, m, k - q, n);
    Integer predicted = expansion;
    if (m == 0) predicted += signed_coefficients(k, n, budget)[0];
    return IdentityReport::scalar("conjecture", {{"m", m}, {"k", k}, {"n", n}},
                                  Rational(lattice), Rational(predicted));
  }

 private:
  const std::vector<Integer>& coefficients_unlocked(long k, long n, long budget) {
    auto key = std::make_pair(k, n);
    auto it = coefficient_cache_.find(key);
    if (it != coefficient_cache_.end()) return it->second;

    std::vector<Integer> c(static_cast<std::size_t>(k * n) + 1, Integer(0));
    enumerate_multisets(
        k, n,
        [&](const std::vector<long>& tuple) {
          for (long j = 0; j < k; ++j) {
            long v = tuple[j] - j * n;
            if (v >= 0)
              c[v] += 1;
            else
              c[-v] -= 1;
          }
        },
        budget);
    return coefficient_cache_.emplace(key, std::move(c)).first->second;
  }

  CombinatorialTables& tables_;
  std::mutex mutex_;
  std::map<std::pair<long, long>, std::vector<Integer>> coefficient_cache_;
};

}  // namespace powsum
