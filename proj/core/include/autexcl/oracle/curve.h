// Copyright 2026 The autexcl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AUTEXCL_ORACLE_CURVE_H_
#define AUTEXCL_ORACLE_CURVE_H_

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "autexcl/oracle/field_poly.h"
#include "autexcl/oracle/finite_field.h"

namespace autexcl {

// y^2 + h(x) y = f(x) with deg f = 2g + 1, so the smooth model has a single
// point at infinity.
struct HyperellipticEquation {
  FieldPoly f;
  FieldPoly h;
};

struct QuarticTerm {
  int ex = 0;
  int ey = 0;
  int ez = 0;
  FiniteField::Element coeff = 0;
};

// F(x, y, z) = 0 in P^2, F homogeneous of degree 4.
struct PlaneQuarticEquation {
  std::vector<QuarticTerm> terms;
};

class CurveModel {
 public:
  // Rejects anything but a smooth odd-degree model of genus >= 2: odd
  // characteristic needs h = 0 and squarefree f; characteristic 2 needs
  // h != 0 and no singular affine point over the root fields of h.
  static CurveModel hyperelliptic(
      std::shared_ptr<const FiniteField> field, FieldPoly f, FieldPoly h = {},
      std::uint64_t budget = FiniteField::kDefaultBudget);

  // Rejects non-homogeneous or zero forms and any singular point found over
  // F_{q^d}, d <= 6 within budget. Smoothness beyond that search is not
  // proven, which is recorded in warnings().
  static CurveModel plane_quartic(
      std::shared_ptr<const FiniteField> field, std::vector<QuarticTerm> terms,
      std::uint64_t budget = FiniteField::kDefaultBudget);

  const FiniteField& field() const { return *field_; }
  const std::shared_ptr<const FiniteField>& field_ptr() const { return field_; }
  std::uint64_t q() const { return field_->size(); }
  int genus() const { return genus_; }

  bool is_hyperelliptic() const {
    return std::holds_alternative<HyperellipticEquation>(equation_);
  }
  const HyperellipticEquation& hyperelliptic() const {
    return std::get<HyperellipticEquation>(equation_);
  }
  const PlaneQuarticEquation& quartic() const {
    return std::get<PlaneQuarticEquation>(equation_);
  }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  CurveModel(std::shared_ptr<const FiniteField> field,
             std::variant<HyperellipticEquation, PlaneQuarticEquation> eq,
             int genus)
      : field_(std::move(field)), equation_(std::move(eq)), genus_(genus) {}

  std::shared_ptr<const FiniteField> field_;
  std::variant<HyperellipticEquation, PlaneQuarticEquation> equation_;
  int genus_;
  std::vector<std::string> warnings_;
};

// F(x0, y, z0) style restrictions used by the quartic enumerator: the
// polynomial in the free variable obtained by fixing the others.
// `which` selects the free variable: 0 = x, 1 = y, 2 = z.
FieldPoly quartic_restrict(const FiniteField& f,
                           const std::vector<QuarticTerm>& terms, int which,
                           FiniteField::Element a, FiniteField::Element b);

// Terms of dF/dvar, var in {0, 1, 2}.
std::vector<QuarticTerm> quartic_partial(const FiniteField& f,
                                         const std::vector<QuarticTerm>& terms,
                                         int var);

}  // namespace autexcl

#endif  // AUTEXCL_ORACLE_CURVE_H_
