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

// Published exclusion tables for modular curves, keyed by fixture id.

#ifndef AUTEXCL_TOOLS_TABLES_H_
#define AUTEXCL_TOOLS_TABLES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autexcl/algebra.h"

namespace autexcl::cli {

// One published value: sum_{n_from <= n <= n_to} P_{N^m}(n) = expected_sum.
// Rows without n_to/expected_sum are informational scans to --nmax.
struct TableRow {
  TableRow(std::string id, PrimePower pp)
      : curve_id(std::move(id)), prime_power(pp) {}

  std::string curve_id;
  PrimePower prime_power;
  std::optional<int> expected_genus;
  int n_from = 1;
  std::optional<int> n_to;
  std::optional<std::uint64_t> expected_sum;
  std::optional<std::uint64_t> override_bound;
};

struct TableSpec {
  std::string table_id;
  std::string title;
  std::vector<TableRow> rows;
};

const std::vector<TableSpec>& all_tables();
const TableSpec* find_table(std::string_view table_id);

}  // namespace autexcl::cli

#endif  // AUTEXCL_TOOLS_TABLES_H_
