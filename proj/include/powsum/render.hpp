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
#include <string>
#include <vector>

#include <json.hpp>

#include "powsum/polynomial.hpp"
#include "powsum/rational.hpp"
#include "powsum/report.hpp"

namespace powsum {

using Json = nlohmann::ordered_json;

inline std::string rational_text(const Rational& r) { return r.str(); }

inline std::string rational_latex(const Rational& r) {
  if (r.is_integer()) return r.numerator().get_str();
  std::string sign = r.sign() < 0 ? "-" : "";
  return sign + "\\frac{" + abs(r).numerator().get_str() + "}{" +
         r.denominator().get_str() + "}";
}

namespace detail {

// One additive term "coef var^exp". The coefficient magnitude 1 is left
// implicit in front of a variable part.
inline std::string term(const Rational& magnitude, const std::string& var,
                        std::size_t exp, bool latex) {
  std::string coef = latex ? rational_latex(magnitude) : rational_text(magnitude);
  if (exp == 0) return coef;
  std::string varpart = var;
  if (exp > 1) varpart += latex ? ("^{" + std::to_string(exp) + "}") : ("^" + std::to_string(exp));
  if (magnitude == Rational(1)) return varpart;
  return coef + " " + varpart;
}

inline std::string render_terms(const RationalPolynomial& p, bool latex) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = p.coefficients().size(); i-- > 0;) {
    const Rational& c = p.coefficients()[i];
    if (c.is_zero()) continue;
    if (out.empty())
      out += (c.sign() < 0 ? "-" : "");
    else
      out += (c.sign() < 0 ? " - " : " + ");
    out += term(abs(c), p.variable(), i, latex);
  }
  return out;
}

struct FactoredForm {
  int sign = 1;                // overall sign
  Rational scale{1};           // positive rational prefix
  std::size_t monomial = 0;    // power of the variable pulled out
  RationalPolynomial inner;    // integer coefficients, positive leading term

  explicit FactoredForm(const RationalPolynomial& p) : inner(p.variable()) {
    if (p.is_zero()) return;
    while (p.coefficient(monomial).is_zero()) ++monomial;
    std::vector<Rational> q(p.coefficients().begin() +
                                static_cast<std::ptrdiff_t>(monomial),
                            p.coefficients().end());
    Integer num_gcd(0), den_lcm(1);
    for (const Rational& c : q) {
      if (c.is_zero()) continue;
      Integer n = abs(c).numerator();
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
      Integer d = c.denominator();
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    sign = q.back().sign();
    scale = Rational(num_gcd, den_lcm);
    Rational inv = Rational(sign) / scale;
    for (Rational& c : q) c = c * inv;
    inner = RationalPolynomial(p.variable(), std::move(q));
  }
};

}  // namespace detail

/// Plain math notation, e.g. "1/2 n^2 + 1/2 n".
inline std::string poly_text(const RationalPolynomial& p) {
  return detail::render_terms(p, false);
}

/// Plain LaTeX, e.g. "n^{2} - 1".
inline std::string poly_latex(const RationalPolynomial& p) {
  return detail::render_terms(p, true);
}

namespace detail {

inline std::string render_factored(const RationalPolynomial& p, bool latex) {
  if (p.is_zero()) return "0";
  FactoredForm f(p);
  std::string out = f.sign < 0 ? "-" : "";
  bool have_prefix = f.sign < 0;
  if (f.scale != Rational(1)) {
    out += latex ? rational_latex(f.scale) : rational_text(f.scale);
    out += " ";
    have_prefix = true;
  }
  if (f.monomial > 0) {
    out += p.variable();
    if (f.monomial > 1)
      out += latex ? ("^{" + std::to_string(f.monomial) + "}")
                   : ("^" + std::to_string(f.monomial));
    out += " ";
    have_prefix = true;
  }
  bool inner_is_one = f.inner == RationalPolynomial::constant(p.variable(), Rational(1));
  if (inner_is_one) {
    if (f.monomial == 0 && f.scale == Rational(1)) out += "1";
  } else if (have_prefix) {
    out += latex ? ("\\left(" + render_terms(f.inner, latex) + "\\right)")
                 : ("(" + render_terms(f.inner, latex) + ")");
  } else {
    out += render_terms(f.inner, latex);
  }
  // drop a trailing separator space left before an omitted inner part
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

}  // namespace detail

/// Content-and-monomial factored notation, e.g. "-1/8 k^2 (k - 1)".
/// Only the common power of the variable and the rational content are
/// pulled out; no polynomial factorization is attempted.
inline std::string poly_factored_text(const RationalPolynomial& p) {
  return detail::render_factored(p, false);
}

/// Same factored layout in LaTeX, e.g. "-\frac{1}{8} k^{2} \left(k - 1\right)".
inline std::string poly_factored_latex(const RationalPolynomial& p) {
  return detail::render_factored(p, true);
}

/// Exponent-to-coefficient map keyed by exponent, ascending.
inline Json poly_json(const RationalPolynomial& p) {
  Json coeffs = Json::object();
  for (std::size_t i = 0; i < p.coefficients().size(); ++i)
    if (!p.coefficients()[i].is_zero())
      coeffs[std::to_string(i)] = p.coefficients()[i].str();
  return Json{{"var", p.variable()}, {"coeffs", coeffs}};
}

inline Json report_value_json(const IdentityReport::Value& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return Json(r->str());
  return poly_json(std::get<RationalPolynomial>(v));
}

inline std::string report_value_text(const IdentityReport::Value& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return r->str();
  return poly_text(std::get<RationalPolynomial>(v));
}

inline std::string report_params_compact(const IdentityReport& report) {
  std::string out;
  for (const auto& [name, value] : report.parameters) {
    if (!out.empty()) out += ";";
    out += name + "=" + std::to_string(value);
  }
  return out;
}

inline std::string report_text_line(const IdentityReport& report) {
  std::string out = report.identity_id;
  for (const auto& [name, value] : report.parameters)
    out += " " + name + "=" + std::to_string(value);
  if (report.holds) return out + ": holds";
  return out + ": FAIL lhs=" + report_value_text(report.lhs) +
         " rhs=" + report_value_text(report.rhs) +
         " residual=" + report_value_text(report.residual);
}

inline std::string report_csv_row(const IdentityReport& report) {
  return report.identity_id + "," + report_params_compact(report) + "," +
         (report.holds ? "true" : "false");
}

inline Json report_json(const IdentityReport& report) {
  Json params = Json::object();
  for (const auto& [name, value] : report.parameters) params[name] = value;
  Json j{{"identity", report.identity_id}, {"params", params}};
  if (!report.method.empty()) j["method"] = report.method;
  j["lhs"] = report_value_json(report.lhs);
  j["rhs"] = report_value_json(report.rhs);
  j["residual"] = report_value_json(report.residual);
  j["holds"] = report.holds;
  return j;
}

}  // namespace powsum
