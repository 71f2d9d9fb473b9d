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

// Univariate polynomials over a FiniteField, ascending coefficient vectors.
// The empty vector is the zero polynomial.

#ifndef AUTEXCL_ORACLE_FIELD_POLY_H_
#define AUTEXCL_ORACLE_FIELD_POLY_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "autexcl/oracle/finite_field.h"

namespace autexcl {

using FieldPoly = std::vector<FiniteField::Element>;

void fp_trim(FieldPoly& a);
inline int fp_degree(const FieldPoly& a) {
  return static_cast<int>(a.size()) - 1;
}

FieldPoly fp_add(const FiniteField& f, const FieldPoly& a, const FieldPoly& b);
FieldPoly fp_sub(const FiniteField& f, const FieldPoly& a, const FieldPoly& b);
FieldPoly fp_mul(const FiniteField& f, const FieldPoly& a, const FieldPoly& b);
FieldPoly fp_scale(const FiniteField& f, const FieldPoly& a,
                   FiniteField::Element c);
// Quotient and remainder; b must be nonzero.
std::pair<FieldPoly, FieldPoly> fp_divmod(const FiniteField& f,
                                          const FieldPoly& a,
                                          const FieldPoly& b);
FieldPoly fp_mod(const FiniteField& f, const FieldPoly& a, const FieldPoly& b);
// Monic gcd; gcd(0, 0) = 0.
FieldPoly fp_gcd(const FiniteField& f, FieldPoly a, FieldPoly b);
FieldPoly fp_derivative(const FiniteField& f, const FieldPoly& a);
FiniteField::Element fp_eval(const FiniteField& f, const FieldPoly& a,
                             FiniteField::Element x);
FieldPoly fp_map(const FieldEmbedding& embed, const FieldPoly& a);

// Number of distinct roots of a in the field: deg gcd(y^|F| - y, a).
// The zero polynomial vanishes everywhere and returns |F|.
std::uint64_t fp_count_distinct_roots(const FiniteField& f, const FieldPoly& a);

}  // namespace autexcl

#endif  // AUTEXCL_ORACLE_FIELD_POLY_H_
