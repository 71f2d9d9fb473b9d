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

// Curve files, one curve per file, '#' comments:
//
//   curve hyperelliptic [id=<name>] p=<p> k=<k> f=<c0,c1,...> [h=<c0,...>]
//   curve quartic [id=<name>] p=<p> k=<k> F=<e1,e2,e3:c;...>
//   map involution [order=<n>]
//   map hyperelliptic a= b= c= d= e= w=<w0,...> [order=<n>]
//   map matrix m=<m00,m01,...,m22> [order=<n>]
//
// Field elements are packed integers (sum a_i p^i over the canonical
// modulus). Negative values are accepted only over prime fields.

#ifndef AUTEXCL_ORACLE_CURVE_IO_H_
#define AUTEXCL_ORACLE_CURVE_IO_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autexcl/oracle/curve.h"
#include "autexcl/oracle/curve_map.h"

namespace autexcl {

struct DeclaredMap {
  CurveMap map;
  std::optional<int> order;  // expected order, if the file states one
  int line = 0;
};

struct CurveFile {
  std::string id;
  CurveModel curve;
  std::vector<DeclaredMap> maps;
};

// Throws ParseError (with line) on malformed text, and the CurveModel
// construction errors on invalid models.
CurveFile parse_curve_file(std::string_view text,
                           std::uint64_t budget = FiniteField::kDefaultBudget);

// Throws FileNotFound when the path cannot be read.
CurveFile load_curve_file(const std::string& path,
                          std::uint64_t budget = FiniteField::kDefaultBudget);

}  // namespace autexcl

#endif  // AUTEXCL_ORACLE_CURVE_IO_H_
