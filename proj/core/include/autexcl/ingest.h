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

// Hecke eigenvalue datasets for modular curves and the Weil polynomial file
// format.
//
// Dataset grammar, '#' comments:
//
//   curve_id=<string>
//   expected_genus=<int>
//   ell=<prime>
//   base_change_k=<int>            (optional, default 1)
//   record label=<string> level=<int> al=<+1|-1> h=<c0,...,1> mult=<int>
//
// h is the characteristic polynomial of a_ell on one newform orbit,
// ascending and monic. Which orbits belong to a curve is decided when the
// fixture is curated; here only genus totals and Weil bounds are checked.
//
// Weil polynomial file, one line:
//
//   weil [id=<string>] q=<q> g=<g> coeffs=<c0,c1,...,1>

#ifndef AUTEXCL_INGEST_H_
#define AUTEXCL_INGEST_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "autexcl/algebra.h"

namespace autexcl {

struct HeckeRecord {
  std::string label;
  std::uint64_t level = 0;
  int al_sign = 1;
  std::uint64_t ell = 0;
  IntPolynomial h;
  int mult = 1;
  int line = 0;
};

struct CurveDataset {
  std::string curve_id;
  int expected_genus = 0;
  std::uint64_t ell = 0;
  int base_change_k = 1;
  std::vector<HeckeRecord> records;
};

// Throws ParseError with the line number for malformed or inconsistent
// records, and ValidationError when the orbit degrees do not add up to the
// expected genus.
CurveDataset parse_dataset(std::string_view text);
CurveDataset load_dataset(const std::string& path);

// Eichler-Shimura product over ell, base changed to ell^k, validated.
WeilPolynomial assemble(const CurveDataset& dataset);

struct WeilFile {
  std::string id;
  WeilPolynomial poly;
};

WeilFile parse_weil_file(std::string_view text);
WeilFile load_weil_file(const std::string& path);
std::string format_weil_file(const WeilPolynomial& poly,
                             const std::string& id = "");

}  // namespace autexcl

#endif  // AUTEXCL_INGEST_H_
