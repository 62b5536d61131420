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

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "powsum/polynomial.hpp"
#include "powsum/rational.hpp"

namespace powsum {

/// Structured pass/fail record for one identity instance. Both sides are
/// either exact scalars or exact polynomials; `residual` is lhs - rhs and
/// `holds` is true iff the residual is identically zero.
struct IdentityReport {
  using Value = std::variant<Rational, RationalPolynomial>;

  std::string identity_id;
  std::vector<std::pair<std::string, long>> parameters;  // in declaration order
  std::string method;  // how the ingredients were obtained, when it matters
  Value lhs;
  Value rhs;
  Value residual;
  bool holds = false;

  static IdentityReport scalar(std::string id,
                               std::vector<std::pair<std::string, long>> params,
                               const Rational& lhs, const Rational& rhs) {
    IdentityReport r;
    r.identity_id = std::move(id);
    r.parameters = std::move(params);
    r.lhs = lhs;
    r.rhs = rhs;
    Rational diff = lhs - rhs;
    r.residual = diff;
    r.holds = diff.is_zero();
    return r;
  }

  static IdentityReport polynomial(std::string id,
                                   std::vector<std::pair<std::string, long>> params,
                                   const RationalPolynomial& lhs,
                                   const RationalPolynomial& rhs) {
    IdentityReport r;
    r.identity_id = std::move(id);
    r.parameters = std::move(params);
    r.lhs = lhs;
    r.rhs = rhs;
    RationalPolynomial diff = lhs - rhs;
    r.residual = diff;
    r.holds = diff.is_zero();
    return r;
  }
};

}  // namespace powsum
