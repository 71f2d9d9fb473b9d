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

// Exhaustive point counting. Slow by design: it is the ground truth the
// zeta-function path is tested against.

#ifndef AUTEXCL_ORACLE_ENUMERATE_H_
#define AUTEXCL_ORACLE_ENUMERATE_H_

#include <cstdint>

#include "autexcl/algebra.h"
#include "autexcl/oracle/curve.h"
#include "autexcl/zeta.h"

namespace autexcl {

struct EnumerateOptions {
  std::uint64_t budget = FiniteField::kDefaultBudget;
  // Worker threads for one count; 0 picks hardware concurrency. Small
  // fields always run on the calling thread.
  unsigned threads = 0;
};

// |X(F_{q^n})|. Hyperelliptic: affine solutions of y^2 + h y = f plus the
// single point at infinity. Quartic: projective points counted on the
// representatives (x : y : 1), (x : 1 : 0), (1 : 0 : 0).
// Throws BudgetExceeded when q^n exceeds the budget.
std::uint64_t count_points(const CurveModel& curve, int n,
                           const EnumerateOptions& options = {});

// Weil polynomial from the counts over F_{q^n}, n <= g, checked against
// enumeration for g < n <= 2g while q^n stays within budget.
// Throws ValidationError on any disagreement.
WeilPolynomial charpoly_from_curve(const CurveModel& curve,
                                   const EnumerateOptions& options = {});

// Exact counts for n = 1..n_max, tagged with curve provenance.
PointCountSeries curve_point_series(const CurveModel& curve, int n_max,
                                    const EnumerateOptions& options = {});

}  // namespace autexcl

#endif  // AUTEXCL_ORACLE_ENUMERATE_H_
