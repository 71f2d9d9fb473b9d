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

// Automorphisms of oracle curves, checked by symbolic substitution.

#ifndef AUTEXCL_ORACLE_CURVE_MAP_H_
#define AUTEXCL_ORACLE_CURVE_MAP_H_

#include <array>
#include <variant>
#include <vector>

#include "autexcl/oracle/curve.h"

namespace autexcl {

// On the weighted model Y^2 + H(X,Z) Y = F(X,Z), weights (1, g+1, 1):
//
//   (X : Y : Z) -> (aX + bZ : eY + W(X,Z) : cX + dZ)
//
// w[i] is the coefficient of X^i Z^{g+1-i} in W. In affine terms this is
// x -> (ax + b)/(cx + d), y -> (e y + W(x,1)) / (cx + d)^{g+1}.
struct HyperellipticMap {
  FiniteField::Element a = 1, b = 0, c = 0, d = 1, e = 1;
  std::vector<FiniteField::Element> w;
};

// (x : y : z) -> M (x, y, z)^T, row-major.
struct ProjectiveMap {
  std::array<FiniteField::Element, 9> m{};
};

using CurveMap = std::variant<HyperellipticMap, ProjectiveMap>;

// (x, y) -> (x, -y - h(x)).
HyperellipticMap hyperelliptic_involution(const CurveModel& curve);

// True when the map is invertible and carries the defining equation to a
// nonzero multiple of itself.
bool preserves_curve(const CurveModel& curve, const CurveMap& map);

// Exact order of a curve-preserving map. Throws ValidationError when the map
// does not preserve the curve, or when the order exceeds `cap`.
int verify_map(const CurveModel& curve, const CurveMap& map, int cap = 512);

}  // namespace autexcl

#endif  // AUTEXCL_ORACLE_CURVE_MAP_H_
