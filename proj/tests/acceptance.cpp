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

// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Every comparison is exact; the per-criterion time
// budgets are asserted as part of the criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "powsum/cli.hpp"
#include "powsum/identities.hpp"
#include "powsum/partition_sums.hpp"
#include "powsum/power_sums.hpp"

using namespace powsum;

namespace {

struct Harness {
  int failures = 0;

  void criterion(int number, const std::string& label, double seconds_budget,
                 const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > seconds_budget) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    if (!ok) ++failures;
    std::printf("[%s] criterion %d: %s (%s%.2fs)\n", ok ? "PASS" : "FAIL", number,
                label.c_str(), detail.empty() ? "" : (detail + ", ").c_str(), elapsed);
    std::fflush(stdout);
  }
};

RationalPolynomial npoly(std::vector<Rational> coeffs) {
  return RationalPolynomial("n", std::move(coeffs));
}

RationalPolynomial kpoly(std::vector<Rational> coeffs) {
  return RationalPolynomial("k", std::move(coeffs));
}

// Printed reference table of the power-sum polynomials, instantiated at a
// concrete order k.
RationalPolynomial reference_powersum(long m, long k) {
  RationalPolynomial nk =
      RationalPolynomial::monomial("n", static_cast<std::size_t>(k), Rational(1));
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
    case 2:
      return (nk * np1 *
              npoly({Rational(3) * kk - Rational(1), Rational(3) * kk + Rational(1)}))
          .scaled(kk / Rational(12));
    case 3:
      return (nk * np1 * np1 * npoly({kk - Rational(1), kk + Rational(1)}))
          .scaled(kk * kk / Rational(8));
    case 4:
      return (nk * np1 *
              npoly({cubic(15, -30, 5, 2), cubic(45, -30, -5, -2), cubic(45, 30, -5, 2),
                     cubic(15, 30, 5, -2)}))
          .scaled(kk / Rational(240));
    case 5:
      return (nk * np1 * np1 *
              npoly({cubic(3, -10, 5, 2), cubic(9, -10, -5, -2), cubic(9, 10, -5, 2),
                     cubic(3, 10, 5, -2)}))
          .scaled(kk * kk / Rational(96));
    default:
      return RationalPolynomial("n");
  }
}

}  // namespace

int main() {
  CombinatorialTables tables;
  BernoulliFamily family(tables);
  PartitionSums partitions(tables);
  Harness h;

  h.criterion(1, "power-sum polynomials reproduce the brute-force sums", 10.0,
              [&](std::string& detail) {
                long cases = 0;
                for (long m = 0; m <= 8; ++m)
                  for (long k = 1; k <= 5; ++k)
                    for (long n = 1; n <= 10; ++n) {
                      if (!theorem_check(family, {m, k, n}).holds) return false;
                      ++cases;
                    }
                detail = std::to_string(cases) + " cases, exact";
                return true;
              });

  h.criterion(2, "reference polynomial tables (with the m = 4 factor-k fix)", 5.0,
              [&](std::string& detail) {
                bool ok = true;
                ok = ok && family.norlund_polynomial(0) == kpoly({Rational(1)});
                ok = ok && family.norlund_polynomial(1) == kpoly({Rational(0), Rational(-1, 2)});
                ok = ok && family.norlund_polynomial(2) ==
                               kpoly({Rational(0), Rational(-1, 12), Rational(1, 4)});
                ok = ok && family.norlund_polynomial(3) ==
                               kpoly({Rational(0), Rational(0), Rational(1, 8), Rational(-1, 8)});
                ok = ok && family.norlund_polynomial(5) ==
                               kpoly({Rational(0), Rational(0), Rational(-1, 48),
                                      Rational(-5, 96), Rational(5, 48), Rational(-1, 32)});

                // printed m = 4 form, recovered only after multiplying by k
                RationalPolynomial printed = kpoly({Rational(2, 240), Rational(5, 240),
                                                    Rational(-30, 240), Rational(15, 240)});
                ok = ok && family.norlund_polynomial(4) == printed * kpoly({Rational(0), Rational(1)});
                ok = ok && family.higher_bernoulli(4, 2, BernoulliFamily::Path::convolution) ==
                               Rational(1, 10);

                long matched = 0;
                for (long m = 0; m <= 5; ++m)
                  for (long k = 1; k <= 6; ++k) {
                    if (higher_faulhaber_poly(family, m, k) != reference_powersum(m, k))
                      return false;
                    ++matched;
                  }
                detail = "6 order polynomials + " + std::to_string(matched) +
                         " power-sum polynomials";
                return ok;
              });

  h.criterion(3, "all Bernoulli computation routes agree", 10.0,
              [&](std::string& detail) {
                long checks = 0;
                for (long m = 0; m <= 20; ++m)
                  for (long k = 0; k <= 10; ++k) {
                    Rational conv =
                        family.higher_bernoulli(m, k, BernoulliFamily::Path::convolution);
                    if (family.higher_bernoulli(m, k, BernoulliFamily::Path::triangular) !=
                        conv)
                      return false;
                    if (k >= 1 &&
                        family.higher_bernoulli(
                            m, k, BernoulliFamily::Path::norlund_recurrence) != conv)
                      return false;
                    ++checks;
                  }
                for (long m = 0; m <= 15; ++m)
                  for (long k = 1; k <= 8; ++k) {
                    if (family.bernoulli_via_stirling(m, k) !=
                        family.higher_bernoulli(m, k))
                      return false;
                    ++checks;
                  }
                detail = std::to_string(checks) + " agreements";
                return true;
              });

  h.criterion(4, "identity sweeps, all exact", 60.0, [&](std::string& detail) {
    long checks = 0;
    for (long m = 0; m <= 20; ++m) {
      if (!verify_bernoulli_recurrence(family, m).holds) return false;
      ++checks;
    }
    for (long m = 0; m <= 10; ++m)
      for (long k = 1; k <= 6; ++k) {
        if (!verify_stirling_weighted_recurrence(family, m, k).holds) return false;
        ++checks;
      }
    for (long m = 0; m <= 8; ++m)
      for (long k = 1; k <= 5; ++k)
        for (long r = 1; r <= k; ++r) {
          if (!verify_general_relation(family, m, k, r).holds) return false;
          ++checks;
        }
    // specialization cross-checks on the shared grids
    for (long m = 0; m <= 8; ++m)
      for (long k = 1; k <= 5; ++k) {
        IdentityReport low = verify_general_relation(family, m, k, 1);
        IdentityReport weighted = verify_stirling_weighted_recurrence(family, m, k);
        if (std::get<Rational>(low.lhs) != std::get<Rational>(weighted.lhs)) return false;
        if (std::get<Rational>(low.rhs) != std::get<Rational>(weighted.rhs)) return false;
        IdentityReport top = verify_general_relation(family, m, k, k);
        IdentityReport higher = verify_higher_recurrence(family, m, k);
        if (std::get<Rational>(top.lhs) != std::get<Rational>(higher.lhs)) return false;
        if (std::get<Rational>(top.rhs) != std::get<Rational>(higher.rhs)) return false;
        checks += 2;
      }
    for (long m = 0; m <= 6; ++m)
      for (long k = 1; k <= 4; ++k)
        for (long r = 1; r <= k; ++r) {
          if (!verify_r_polynomial(family, m, k, r).holds) return false;
          ++checks;
          if (r == k) {
            if (!verify_r_polynomial_diagonal(family, m, k).holds) return false;
            ++checks;
          }
        }
    for (long m = 0; m <= 6; ++m)
      for (long k = 1; k <= 4; ++k)
        for (long r = 1; r <= k; ++r)
          for (long n = 1; n <= 6; ++n) {
            if (!verify_sum_identity(family, m, k, r, n).holds) return false;
            ++checks;
          }
    detail = std::to_string(checks) + " identity instances";
    return true;
  });

  h.criterion(5, "multiset-lattice residuals equal c_0 exactly at power zero", 60.0,
              [&](std::string& detail) {
                if (partitions.script_sum(1, 2, 2) != 30) return false;
                if (partitions.conjecture_residual(1, 2, 2) != 0) return false;
                if (partitions.conjecture_residual(0, 2, 2) != 2) return false;
                if (partitions.signed_coefficients(2, 2)[0] != 2) return false;

                long checks = 0;
                for (long m = 0; m <= 6; ++m)
                  for (long k = 1; k <= 4; ++k)
                    for (long n = 1; n <= 4; ++n) {
                      Integer expected =
                          m == 0 ? partitions.signed_coefficients(k, n)[0] : Integer(0);
                      if (partitions.conjecture_residual(m, k, n) != expected)
                        return false;
                      ++checks;
                    }
                detail = std::to_string(checks) + " residuals";
                return true;
              });

  h.criterion(6, "structural property suites", 30.0, [&](std::string& detail) {
    // Stirling orthogonality
    for (long n = 0; n <= 12; ++n)
      for (long k = 0; k <= 12; ++k) {
        Integer acc(0);
        for (long j = 0; j <= n; ++j)
          acc += tables.stirling1_signed(n, j) * tables.stirling2(j, k);
        if (acc != (n == k ? 1 : 0)) return false;
      }
    // extended rows: palindromic, sum n^k
    for (long k = 0; k <= 6; ++k)
      for (long n = 1; n <= 6; ++n) {
        std::vector<Integer> row = tables.extended_binomial_row(k, n);
        Integer sum(0);
        for (const Integer& v : row) sum += v;
        if (sum != int_pow(Integer(n), static_cast<unsigned long>(k))) return false;
        std::vector<Integer> reversed(row.rbegin(), row.rend());
        if (row != reversed) return false;
      }
    // divisibility of the closed forms by n^k, and by (n + 1) for m >= 1
    for (long m = 0; m <= 8; ++m)
      for (long k = 1; k <= 5; ++k) {
        RationalPolynomial p = higher_faulhaber_poly(family, m, k);
        for (long e = 0; e < k; ++e)
          if (!p.coefficient(e).is_zero()) return false;
        if (m >= 1 && !p.eval(Rational(-1)).is_zero()) return false;
      }
    // odd classical Bernoulli numbers vanish
    for (long m = 3; m <= 21; m += 2)
      if (!family.bernoulli(m).is_zero()) return false;
    // Stirling polynomial difference identity
    RationalPolynomial k_var = kpoly({Rational(0), Rational(1)});
    for (long m = 1; m <= 10; ++m) {
      RationalPolynomial fm = family.stirling_polynomial(m);
      if (fm - fm.shifted(Rational(-1)) != k_var * family.stirling_polynomial(m - 1))
        return false;
    }
    detail = "orthogonality, rows, divisibility, parity, differences";
    return true;
  });

  h.criterion(7, "CLI determinism and exit-status contract", 30.0,
              [&](std::string& detail) {
                const std::vector<std::vector<std::string>> invocations = {
                    {"bernoulli", "--m", "10"},
                    {"higher-bernoulli", "--m", "5", "--k", "3"},
                    {"norlund", "--m", "4"},
                    {"stirling", "--kind", "second", "--n-max", "8"},
                    {"stirling", "--kind", "extended", "--k", "2", "--n", "4"},
                    {"powersum", "--m", "3", "--k", "2", "--n", "4"},
                    {"poly", "--m", "2", "--k", "2"},
                    {"verify", "impl1", "--m-max", "3", "--k-max", "3"},
                    {"conjecture", "--m-max", "2", "--k-max", "2", "--n-max", "2"},
                    {"appendix"},
                };
                auto run = [](const std::vector<std::string>& args,
                              powsum::cli::Context* ctx) {
                  std::ostringstream out, err;
                  int code = powsum::cli::run_command(args, out, err, ctx);
                  return std::make_pair(code, out.str() + "\x1f" + err.str());
                };
                for (const auto& base : invocations)
                  for (const char* format : {"text", "csv", "json", "latex"}) {
                    std::vector<std::string> args = base;
                    args.push_back("--format");
                    args.push_back(format);
                    auto first = run(args, nullptr);
                    auto second = run(args, nullptr);
                    if (first != second) return false;
                    if (first.first != 0) return false;
                  }

                // exit status: clean run is zero, corrupted table nonzero
                if (run({"verify", "impl", "--m-max", "3", "--k-max", "3"}, nullptr)
                        .first != 0)
                  return false;
                powsum::cli::Context corrupted;
                corrupted.tables.inject_stirling2(4, 2, Integer(8));
                if (run({"verify", "impl", "--m-max", "3", "--k-max", "3"}, &corrupted)
                        .first == 0)
                  return false;
                if (run({"no-such-command"}, nullptr).first == 0) return false;
                detail = "40 deterministic invocations + exit-status checks";
                return true;
              });

  if (h.failures == 0)
    std::printf("acceptance: all 7 criteria passed\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", h.failures);
  return h.failures;
}
