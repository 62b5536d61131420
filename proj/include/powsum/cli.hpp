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

#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "powsum/bernoulli.hpp"
#include "powsum/combinatorics.hpp"
#include "powsum/identities.hpp"
#include "powsum/partition_sums.hpp"
#include "powsum/power_sums.hpp"
#include "powsum/render.hpp"

namespace powsum::cli {

/// The shared state behind one invocation. Tests may build their own
/// context (possibly with injected table faults) and pass it to
/// run_command; by default each invocation gets a fresh one.
struct Context {
  CombinatorialTables tables;
  BernoulliFamily family;
  PartitionSums partitions;
  Context() : tables(), family(tables), partitions(tables) {}
};

enum class Format { text, csv, json, latex };

inline Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  if (s == "latex") return Format::latex;
  throw std::invalid_argument("unknown format: " + s);
}

/// Budget for multiset enumeration: --budget flag, else POWSUM_BUDGET,
/// else the built-in default.
inline long default_budget() {
  if (const char* env = std::getenv("POWSUM_BUDGET")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultEnumerationBudget;
}

namespace detail {

inline std::string json_dump(const Json& j) { return j.dump(2) + "\n"; }

inline std::string bool_word(bool b) { return b ? "yes" : "no"; }

// ---- single-value commands -------------------------------------------

inline int emit_bernoulli(Context& ctx, long m, long m_max, Format format,
                          std::ostream& out) {
  std::vector<std::pair<long, Rational>> rows;
  if (m >= 0) rows.emplace_back(m, ctx.family.bernoulli(m));
  else
    for (long i = 0; i <= m_max; ++i) rows.emplace_back(i, ctx.family.bernoulli(i));

  switch (format) {
    case Format::text:
      if (rows.size() == 1) out << rows[0].second << "\n";
      else
        for (const auto& [i, v] : rows) out << i << " " << v << "\n";
      break;
    case Format::csv:
      out << "m,value\n";
      for (const auto& [i, v] : rows) out << i << "," << v << "\n";
      break;
    case Format::json: {
      if (rows.size() == 1)
        out << json_dump(Json{{"m", rows[0].first}, {"value", rows[0].second.str()}});
      else {
        Json arr = Json::array();
        for (const auto& [i, v] : rows) arr.push_back(Json{{"m", i}, {"value", v.str()}});
        out << json_dump(Json{{"values", arr}});
      }
      break;
    }
    case Format::latex:
      for (const auto& [i, v] : rows)
        out << "B_{" << i << "} = " << rational_latex(v) << "\n";
      break;
  }
  return 0;
}

inline int emit_higher_bernoulli(Context& ctx, long m, long k,
                                 const std::string& path_name, Format format,
                                 std::ostream& out) {
  BernoulliFamily::Path path = BernoulliFamily::Path::convolution;
  if (path_name == "triangular") path = BernoulliFamily::Path::triangular;
  else if (path_name == "norlund") path = BernoulliFamily::Path::norlund_recurrence;
  else if (path_name != "convolution")
    throw std::invalid_argument("unknown path: " + path_name);
  Rational value = ctx.family.higher_bernoulli(m, k, path);

  switch (format) {
    case Format::text:
      out << value << "\n";
      break;
    case Format::csv:
      out << "m,k,path,value\n" << m << "," << k << "," << path_name << "," << value << "\n";
      break;
    case Format::json:
      out << json_dump(Json{{"m", m}, {"k", k}, {"path", path_name}, {"value", value.str()}});
      break;
    case Format::latex:
      out << "B_{" << m << "}^{(" << k << ")} = " << rational_latex(value) << "\n";
      break;
  }
  return 0;
}

inline int emit_polynomial(long m, long k, const char* kind,
                           const RationalPolynomial& p, bool factored,
                           Format format, std::ostream& out) {
  switch (format) {
    case Format::text:
      out << (factored ? poly_factored_text(p) : poly_text(p)) << "\n";
      break;
    case Format::csv: {
      out << "exponent,coefficient\n";
      for (std::size_t i = 0; i < p.coefficients().size(); ++i)
        if (!p.coefficients()[i].is_zero())
          out << i << "," << p.coefficients()[i] << "\n";
      break;
    }
    case Format::json: {
      Json j;
      j["kind"] = kind;
      j["m"] = m;
      if (k >= 0) j["k"] = k;
      j["poly"] = poly_json(p);
      out << json_dump(j);
      break;
    }
    case Format::latex:
      out << (factored ? poly_factored_latex(p) : poly_latex(p)) << "\n";
      break;
  }
  return 0;
}

// ---- table dumps -------------------------------------------------------

inline int emit_stirling(Context& ctx, const std::string& kind, long n, long k,
                         long n_max, Format format, std::ostream& out) {
  auto entry = [&](long nn, long kk) {
    return kind == "first" ? ctx.tables.stirling1_signed(nn, kk)
                           : ctx.tables.stirling2(nn, kk);
  };

  if (kind == "extended") {
    if (k < 0 || n < 1)
      throw std::invalid_argument("stirling --kind extended requires --k >= 0 and --n >= 1");
    std::vector<Integer> row = ctx.tables.extended_binomial_row(k, n);
    switch (format) {
      case Format::text: {
        for (std::size_t q = 0; q < row.size(); ++q)
          out << (q ? " " : "") << row[q];
        out << "\n";
        break;
      }
      case Format::csv:
        out << "q,value\n";
        for (std::size_t q = 0; q < row.size(); ++q) out << q << "," << row[q] << "\n";
        break;
      case Format::json: {
        Json arr = Json::array();
        for (const Integer& v : row) arr.push_back(v.get_str());
        out << json_dump(Json{{"kind", "extended"}, {"k", k}, {"n", n}, {"row", arr}});
        break;
      }
      case Format::latex: {
        out << "\\begin{pmatrix}";
        for (std::size_t q = 0; q < row.size(); ++q)
          out << (q ? " & " : " ") << row[q];
        out << " \\end{pmatrix}\n";
        break;
      }
    }
    return 0;
  }

  if (kind != "first" && kind != "second")
    throw std::invalid_argument("unknown stirling kind: " + kind);

  if (n_max < 0) {
    if (n < 0 || k < 0)
      throw std::invalid_argument("stirling needs either --n and --k, or --n-max");
    Integer value = entry(n, k);
    switch (format) {
      case Format::text:
        out << value << "\n";
        break;
      case Format::csv:
        out << "kind,n,k,value\n" << kind << "," << n << "," << k << "," << value << "\n";
        break;
      case Format::json:
        out << json_dump(Json{{"kind", kind}, {"n", n}, {"k", k}, {"value", value.get_str()}});
        break;
      case Format::latex:
        out << (kind == "first" ? "s(" : "S(") << n << ", " << k
            << ") = " << value << "\n";
        break;
    }
    return 0;
  }

  // triangle dump, rows n = 0..n_max with entries k = 0..n
  switch (format) {
    case Format::text:
      for (long nn = 0; nn <= n_max; ++nn) {
        for (long kk = 0; kk <= nn; ++kk) out << (kk ? " " : "") << entry(nn, kk);
        out << "\n";
      }
      break;
    case Format::csv:
      for (long nn = 0; nn <= n_max; ++nn) {
        out << nn;
        for (long kk = 0; kk <= nn; ++kk) out << "," << entry(nn, kk);
        out << "\n";
      }
      break;
    case Format::json: {
      Json rows = Json::array();
      for (long nn = 0; nn <= n_max; ++nn) {
        Json row = Json::array();
        for (long kk = 0; kk <= nn; ++kk) row.push_back(entry(nn, kk).get_str());
        rows.push_back(row);
      }
      out << json_dump(Json{{"kind", kind}, {"n_max", n_max}, {"rows", rows}});
      break;
    }
    case Format::latex: {
      out << "\\begin{array}{r|" << std::string(static_cast<std::size_t>(n_max) + 1, 'r')
          << "}\n";
      for (long nn = 0; nn <= n_max; ++nn) {
        out << nn;
        for (long kk = 0; kk <= n_max; ++kk) {
          out << " & ";
          if (kk <= nn) out << entry(nn, kk);
        }
        out << " \\\\\n";
      }
      out << "\\end{array}\n";
      break;
    }
  }
  return 0;
}

// ---- verification sweeps ------------------------------------------------

inline int emit_reports(const std::vector<IdentityReport>& reports, Format format,
                        std::ostream& out) {
  long failed = 0;
  for (const IdentityReport& r : reports)
    if (!r.holds) ++failed;

  switch (format) {
    case Format::text:
      for (const IdentityReport& r : reports) out << report_text_line(r) << "\n";
      out << "summary: " << reports.size() << " checks, " << failed << " failed\n";
      break;
    case Format::csv:
      out << "identity_id,params,holds\n";
      for (const IdentityReport& r : reports) out << report_csv_row(r) << "\n";
      break;
    case Format::json: {
      Json arr = Json::array();
      for (const IdentityReport& r : reports) arr.push_back(report_json(r));
      out << json_dump(Json{{"reports", arr},
                            {"total", reports.size()},
                            {"failed", failed}});
      break;
    }
    case Format::latex: {
      out << "\\begin{tabular}{llc}\n";
      out << "identity & parameters & holds \\\\\n\\hline\n";
      for (const IdentityReport& r : reports)
        out << r.identity_id << " & " << report_params_compact(r) << " & "
            << (r.holds ? "\\checkmark" : "\\times") << " \\\\\n";
      out << "\\end{tabular}\n";
      break;
    }
  }
  return failed > 0 ? 1 : 0;
}

struct SweepLimits {
  long m_max = -1;
  long k_max = -1;
  long r_max = -1;
  long n_max = -1;

  long m(long fallback) const { return m_max >= 0 ? m_max : fallback; }
  long k(long fallback) const { return k_max >= 0 ? k_max : fallback; }
  long r(long fallback) const { return r_max >= 0 ? r_max : fallback; }
  long n(long fallback) const { return n_max >= 0 ? n_max : fallback; }
};

inline void sweep_identity(Context& ctx, const std::string& id, const SweepLimits& lim,
                           std::vector<IdentityReport>& reports) {
  BernoulliFamily& family = ctx.family;
  if (id == "rec-rel") {
    for (long m = 0; m <= lim.m(20); ++m)
      reports.push_back(verify_bernoulli_recurrence(family, m));
  } else if (id == "rec-rel1") {
    for (long m = 0; m <= lim.m(10); ++m)
      for (long k = 1; k <= lim.k(6); ++k)
        reports.push_back(verify_stirling_weighted_recurrence(family, m, k));
  } else if (id == "impl") {
    for (long m = 0; m <= lim.m(8); ++m)
      for (long k = 1; k <= lim.k(5); ++k)
        reports.push_back(verify_higher_recurrence(family, m, k));
  } else if (id == "impl1") {
    for (long m = 0; m <= lim.m(8); ++m)
      for (long k = 1; k <= lim.k(5); ++k)
        for (long r = 1; r <= std::min(k, lim.r(k)); ++r)
          reports.push_back(verify_general_relation(family, m, k, r));
  } else if (id == "le2") {
    for (long m = 0; m <= lim.m(6); ++m)
      for (long k = 1; k <= lim.k(4); ++k)
        for (long r = 1; r <= std::min(k, lim.r(k)); ++r) {
          reports.push_back(verify_r_polynomial(family, m, k, r));
          if (r == k) reports.push_back(verify_r_polynomial_diagonal(family, m, k));
        }
  } else if (id == "le3") {
    for (long m = 0; m <= lim.m(6); ++m)
      for (long k = 1; k <= lim.k(4); ++k)
        for (long r = 1; r <= std::min(k, lim.r(k)); ++r)
          for (long n = 1; n <= lim.n(6); ++n)
            reports.push_back(verify_sum_identity(family, m, k, r, n));
  } else {
    throw std::invalid_argument("unknown identity id: " + id);
  }
}

inline int emit_verify(Context& ctx, const std::string& id, const SweepLimits& lim,
                       Format format, std::ostream& out) {
  static const std::vector<std::string> all_ids = {"rec-rel", "rec-rel1", "impl",
                                                   "impl1",   "le2",      "le3"};
  std::vector<IdentityReport> reports;
  if (id == "all")
    for (const std::string& one : all_ids) sweep_identity(ctx, one, lim, reports);
  else
    sweep_identity(ctx, id, lim, reports);
  return emit_reports(reports, format, out);
}

// ---- theorem / conjecture -----------------------------------------------

inline int emit_powersum(Context& ctx, const PowerSumQuery& query, Format format,
                         std::ostream& out, std::ostream& err) {
  if (exceeds_bounds(query))
    err << "warning: query exceeds the desk-scale bounds (m<=16, k<=8, n<=50); "
           "this may take a while\n";
  IdentityReport report = theorem_check(ctx.family, query);
  const std::string lhs = report_value_text(report.lhs);
  const std::string rhs = report_value_text(report.rhs);
  const std::string residual = report_value_text(report.residual);

  switch (format) {
    case Format::text:
      out << "m=" << query.m << " k=" << query.k << " n=" << query.n
          << ": sum=" << lhs << " poly=" << rhs << " residual=" << residual
          << " holds=" << bool_word(report.holds) << "\n";
      break;
    case Format::csv:
      out << "m,k,n,lhs,rhs,residual,holds\n"
          << query.m << "," << query.k << "," << query.n << "," << lhs << "," << rhs
          << "," << residual << "," << (report.holds ? "true" : "false") << "\n";
      break;
    case Format::json:
      out << json_dump(Json{{"m", query.m},
                            {"k", query.k},
                            {"n", query.n},
                            {"lhs", lhs},
                            {"rhs", rhs},
                            {"residual", residual},
                            {"holds", report.holds}});
      break;
    case Format::latex:
      out << "S_{" << query.m << "}^{(" << query.k << ")}(" << query.n
          << ") = " << lhs << "\n";
      break;
  }
  return report.holds ? 0 : 1;
}

inline int emit_conjecture(Context& ctx, long m_max, long k_max, long n_max,
                           long budget, Format format, std::ostream& out) {
  struct Row {
    long m, k, n;
    Integer residual, expected;
    bool holds;
  };
  std::vector<Row> rows;
  long failed = 0;
  for (long m = 0; m <= m_max; ++m)
    for (long k = 1; k <= k_max; ++k)
      for (long n = 1; n <= n_max; ++n) {
        Integer residual = ctx.partitions.conjecture_residual(m, k, n, budget);
        Integer expected =
            m == 0 ? ctx.partitions.signed_coefficients(k, n, budget)[0] : Integer(0);
        bool holds = residual == expected;
        if (!holds) ++failed;
        rows.push_back({m, k, n, residual, expected, holds});
      }

  switch (format) {
    case Format::text:
      for (const Row& r : rows)
        out << "m=" << r.m << " k=" << r.k << " n=" << r.n << ": residual=" << r.residual
            << " expected=" << r.expected << " holds=" << bool_word(r.holds) << "\n";
      out << "summary: " << rows.size() << " checks, " << failed << " failed\n";
      break;
    case Format::csv:
      out << "m,k,n,residual,expected,holds\n";
      for (const Row& r : rows)
        out << r.m << "," << r.k << "," << r.n << "," << r.residual << "," << r.expected
            << "," << (r.holds ? "true" : "false") << "\n";
      break;
    case Format::json: {
      Json arr = Json::array();
      for (const Row& r : rows)
        arr.push_back(Json{{"m", r.m},
                           {"k", r.k},
                           {"n", r.n},
                           {"residual", r.residual.get_str()},
                           {"expected", r.expected.get_str()},
                           {"holds", r.holds}});
      out << json_dump(
          Json{{"reports", arr}, {"total", rows.size()}, {"failed", failed}});
      break;
    }
    case Format::latex:
      out << "\\begin{tabular}{rrrrrc}\n";
      out << "m & k & n & residual & expected & holds \\\\\n\\hline\n";
      for (const Row& r : rows)
        out << r.m << " & " << r.k << " & " << r.n << " & " << r.residual << " & "
            << r.expected << " & " << (r.holds ? "\\checkmark" : "\\times")
            << " \\\\\n";
      out << "\\end{tabular}\n";
      break;
  }
  return failed > 0 ? 1 : 0;
}

// ---- appendix tables ------------------------------------------------------

inline int emit_appendix(Context& ctx, Format format, std::ostream& out) {
  constexpr long kMaxIndex = 5;
  constexpr long kMaxOrder = 6;
  const std::string note =
      "the m = 4 polynomial differs from some published tables, which omit "
      "the overall factor k; the form here matches the defining series "
      "(value 1/10 at k = 2)";

  std::vector<RationalPolynomial> norlund;
  for (long m = 0; m <= kMaxIndex; ++m) norlund.push_back(ctx.family.norlund_polynomial(m));

  switch (format) {
    case Format::text: {
      out << "Norlund polynomials B_m(k):\n";
      for (long m = 0; m <= kMaxIndex; ++m)
        out << "  B_" << m << " = " << poly_factored_text(norlund[m])
            << (m == 4 ? "  [*]" : "") << "\n";
      out << "  [*] " << note << "\n\n";
      out << "Power-sum polynomials, orders k = 1.." << kMaxOrder << ":\n";
      for (long m = 0; m <= kMaxIndex; ++m)
        for (long k = 1; k <= kMaxOrder; ++k)
          out << "  m=" << m << " k=" << k << ": "
              << poly_factored_text(higher_faulhaber_poly(ctx.family, m, k)) << "\n";
      break;
    }
    case Format::csv: {
      out << "family,m,k,polynomial,note\n";
      for (long m = 0; m <= kMaxIndex; ++m)
        out << "norlund," << m << ",," << poly_factored_text(norlund[m]) << ","
            << (m == 4 ? "\"" + note + "\"" : "") << "\n";
      for (long m = 0; m <= kMaxIndex; ++m)
        for (long k = 1; k <= kMaxOrder; ++k)
          out << "powersum," << m << "," << k << ","
              << poly_factored_text(higher_faulhaber_poly(ctx.family, m, k)) << ",\n";
      break;
    }
    case Format::json: {
      Json norlund_arr = Json::array();
      for (long m = 0; m <= kMaxIndex; ++m)
        norlund_arr.push_back(Json{{"m", m}, {"poly", poly_json(norlund[m])}});
      Json sums_arr = Json::array();
      for (long m = 0; m <= kMaxIndex; ++m)
        for (long k = 1; k <= kMaxOrder; ++k)
          sums_arr.push_back(Json{{"m", m},
                                  {"k", k},
                                  {"poly", poly_json(higher_faulhaber_poly(ctx.family, m, k))}});
      out << json_dump(Json{{"norlund", norlund_arr},
                            {"norlund_note", note},
                            {"power_sums", sums_arr}});
      break;
    }
    case Format::latex: {
      for (long m = 0; m <= kMaxIndex; ++m)
        out << "B_{" << m << "}^{(k)} = " << poly_factored_latex(norlund[m])
            << (m == 4 ? "  % " + note : "") << "\n";
      for (long m = 0; m <= kMaxIndex; ++m)
        for (long k = 1; k <= kMaxOrder; ++k)
          out << "\\hat{S}_{" << m << "}^{(" << k << ")}(n) = "
              << poly_factored_latex(higher_faulhaber_poly(ctx.family, m, k)) << "\n";
      break;
    }
  }
  return 0;
}

}  // namespace detail

/// Parse and run one CLI invocation. Data goes to `out`, diagnostics to
/// `err`. Returns the process exit status: 0 on success, nonzero on usage
/// errors, computation errors, or any failed verification.
inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err, Context* shared = nullptr) {
  Context local;
  Context& ctx = shared ? *shared : local;

  CLI::App app{"exact higher-order power sums, Bernoulli numbers and identity checks"};
  app.name("powsum");
  app.require_subcommand(1);

  std::string format_name = "text";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"text", "csv", "json", "latex"}))
        ->capture_default_str();
  };

  long m = -1, k = -1, n = -1;
  long m_max = -1, k_max = -1, r_max = -1, n_max = -1;
  long budget = -1;
  std::string path_name = "convolution";
  std::string kind;
  std::string identity;

  CLI::App* cmd_bernoulli = app.add_subcommand("bernoulli", "classical Bernoulli number B_m");
  cmd_bernoulli->add_option("--m", m, "index m");
  cmd_bernoulli->add_option("--m-max", m_max, "emit all B_0..B_{m-max}");
  add_format(cmd_bernoulli);

  CLI::App* cmd_higher =
      app.add_subcommand("higher-bernoulli", "higher-order Bernoulli number B_m^(k)");
  cmd_higher->add_option("--m", m, "index m")->required();
  cmd_higher->add_option("--k", k, "order k")->required();
  cmd_higher->add_option("--path", path_name, "computation path")
      ->check(CLI::IsMember({"triangular", "norlund", "convolution"}))
      ->capture_default_str();
  add_format(cmd_higher);

  CLI::App* cmd_norlund =
      app.add_subcommand("norlund", "B_m^(k) as a polynomial in the order k");
  cmd_norlund->add_option("--m", m, "index m")->required();
  add_format(cmd_norlund);

  CLI::App* cmd_stirling = app.add_subcommand(
      "stirling", "Stirling number tables and extended binomial rows");
  cmd_stirling->add_option("--kind", kind, "first | second | extended")
      ->required()
      ->check(CLI::IsMember({"first", "second", "extended"}));
  cmd_stirling->add_option("--n", n, "row index (or range length for extended)");
  cmd_stirling->add_option("--k", k, "column index (or order for extended)");
  cmd_stirling->add_option("--n-max", n_max, "dump the whole triangle up to this row");
  add_format(cmd_stirling);

  CLI::App* cmd_powersum = app.add_subcommand(
      "powersum", "brute-force higher power sum checked against its polynomial");
  cmd_powersum->add_option("--m", m, "power m")->required();
  cmd_powersum->add_option("--k", k, "order k")->required();
  cmd_powersum->add_option("--n", n, "range n")->required();
  add_format(cmd_powersum);

  CLI::App* cmd_poly =
      app.add_subcommand("poly", "closed-form power-sum polynomial in n");
  cmd_poly->add_option("--m", m, "power m")->required();
  cmd_poly->add_option("--k", k, "order k (default 1)");
  add_format(cmd_poly);

  CLI::App* cmd_verify = app.add_subcommand("verify", "run an identity sweep");
  cmd_verify
      ->add_option("identity", identity,
                   "rec-rel | rec-rel1 | impl | impl1 | le2 | le3 | all")
      ->required();
  cmd_verify->add_option("--m-max", m_max, "sweep bound for m");
  cmd_verify->add_option("--k-max", k_max, "sweep bound for k");
  cmd_verify->add_option("--r-max", r_max, "sweep bound for r");
  cmd_verify->add_option("--n-max", n_max, "sweep bound for n");
  add_format(cmd_verify);

  CLI::App* cmd_conjecture = app.add_subcommand(
      "conjecture", "residuals of the multiset-lattice relation");
  cmd_conjecture->add_option("--m-max", m_max, "sweep bound for m (default 6)");
  cmd_conjecture->add_option("--k-max", k_max, "sweep bound for k (default 4)");
  cmd_conjecture->add_option("--n-max", n_max, "sweep bound for n (default 4)");
  cmd_conjecture->add_option("--budget", budget, "max tuples per enumeration");
  add_format(cmd_conjecture);

  CLI::App* cmd_appendix = app.add_subcommand(
      "appendix", "reference tables: Norlund and power-sum polynomials");
  add_format(cmd_appendix);

  std::vector<const char*> argv;
  argv.push_back("powsum");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    Format format = parse_format(format_name);
    if (app.got_subcommand(cmd_bernoulli)) {
      if ((m < 0) == (m_max < 0))
        throw std::invalid_argument("bernoulli requires exactly one of --m or --m-max");
      return detail::emit_bernoulli(ctx, m, m_max, format, out);
    }
    if (app.got_subcommand(cmd_higher))
      return detail::emit_higher_bernoulli(ctx, m, k, path_name, format, out);
    if (app.got_subcommand(cmd_norlund))
      return detail::emit_polynomial(m, -1, "norlund", ctx.family.norlund_polynomial(m),
                                     true, format, out);
    if (app.got_subcommand(cmd_stirling))
      return detail::emit_stirling(ctx, kind, n, k, n_max, format, out);
    if (app.got_subcommand(cmd_powersum))
      return detail::emit_powersum(ctx, PowerSumQuery{m, k, n}, format, out, err);
    if (app.got_subcommand(cmd_poly)) {
      long order = k < 0 ? 1 : k;
      return detail::emit_polynomial(m, order, "powersum",
                                     higher_faulhaber_poly(ctx.family, m, order), false,
                                     format, out);
    }
    if (app.got_subcommand(cmd_verify))
      return detail::emit_verify(ctx, identity,
                                 detail::SweepLimits{m_max, k_max, r_max, n_max}, format,
                                 out);
    if (app.got_subcommand(cmd_conjecture)) {
      long resolved_budget = budget > 0 ? budget : default_budget();
      return detail::emit_conjecture(ctx, m_max >= 0 ? m_max : 6, k_max >= 0 ? k_max : 4,
                                     n_max >= 0 ? n_max : 4, resolved_budget, format, out);
    }
    if (app.got_subcommand(cmd_appendix)) return detail::emit_appendix(ctx, format, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand selected\n";
  return 1;
}

}  // namespace powsum::cli
