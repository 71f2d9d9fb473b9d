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

#include "tables.h"

namespace autexcl::cli {
namespace {

TableRow published(std::string id, PrimePower pp, int genus, int n_to,
                   std::uint64_t sum) {
  TableRow row(std::move(id), pp);
  row.expected_genus = genus;
  row.n_to = n_to;
  row.expected_sum = sum;
  return row;
}

std::vector<TableSpec> build() {
  const PrimePower two(2, 1), three(3, 1), four(2, 2), eight(2, 3);
  std::vector<TableSpec> tables;

  // X_0^+(p) over F_2: sum_{n <= n_to} P_2(n).
  TableSpec x0plus{"x0plus", "X_0^+(p) over F_2, N^m = 2", {}};
  const struct { int p, g, n, sum; } x0[] = {
      {163, 6, 53, 15},  {193, 7, 58, 17},   {197, 6, 42, 15},
      {211, 6, 60, 15},  {223, 6, 54, 15},   {227, 5, 40, 13},
      {229, 7, 63, 17},  {269, 6, 43, 13},   {331, 11, 79, 25},
      {347, 10, 74, 23}, {359, 6, 60, 15},   {383, 8, 88, 19},
      {389, 11, 123, 25}, {431, 8, 89, 19},  {461, 12, 99, 27},
      {563, 15, 116, 33}, {571, 19, 156, 41}, {607, 19, 166, 41}};
  for (const auto& r : x0) {
    x0plus.rows.push_back(published("x0plus_" + std::to_string(r.p), two, r.g,
                                    r.n, static_cast<std::uint64_t>(r.sum)));
  }
  tables.push_back(std::move(x0plus));

  tables.push_back({"xns_step3", "non-split Cartan curves, N^m = 3",
                    {published("xns_13", three, 8, 16, 12),
                     published("xns_17", three, 15, 34, 18),
                     published("xns_19", three, 20, 31, 24),
                     published("xnsplus_19", three, 8, 14, 12),
                     published("xns_23", three, 31, 52, 35),
                     published("xnsplus_23", three, 13, 19, 16),
                     published("xns_29", three, 54, 76, 58),
                     published("xnsplus_29", three, 24, 47, 27),
                     published("xns_31", three, 63, 86, 66),
                     published("xnsplus_31", three, 28, 58, 31)}});

  TableSpec step4{"xnsplus_step4", "X_ns^+(p), involutions, N^m = 2",
                  {published("xnsplus_17", two, 6, 59, 15),
                   published("xnsplus_19_F4", two, 8, 83, 19),
                   published("xnsplus_23", two, 13, 95, 29),
                   published("xnsplus_29", two, 24, 253, 51),
                   published("xnsplus_31", two, 28, 258, 59)}};
  // Over F_25 the sequence vanishes on 8..200, which is why F_4 is used.
  TableRow zero_run("xnsplus_19_F25", two);
  zero_run.expected_genus = 8;
  zero_run.n_from = 8;
  zero_run.n_to = 200;
  zero_run.expected_sum = 0;
  step4.rows.push_back(zero_run);
  tables.push_back(std::move(step4));

  tables.push_back({"xns_step5_ord4", "X_ns(p), order 4",
                    {published("xns_17", four, 15, 81, 38),
                     published("xns_23", four, 31, 127, 70),
                     published("xns_29", four, 54, 143, 115),
                     published("xns_31", four, 63, 291, 134)}});

  tables.push_back({"xns_step5_ord8", "X_ns(p), order 8",
                    {published("xns_13", eight, 8, 15, 34),
                     published("xns_19", eight, 20, 34, 58)}});

  // Involutions of X_s(p) fix at most 12 points; no published values.
  TableSpec xs{"xs_section31", "X_s(p), involutions, bound 12", {}};
  for (int p : {17, 19, 23, 29, 31}) {
    TableRow row("xs_" + std::to_string(p), two);
    row.override_bound = 12;
    xs.rows.push_back(row);
  }
  tables.push_back(std::move(xs));
  return tables;
}

}  // namespace

const std::vector<TableSpec>& all_tables() {
  static const std::vector<TableSpec> tables = build();
  return tables;
}

const TableSpec* find_table(std::string_view table_id) {
  for (const auto& t : all_tables()) {
    if (t.table_id == table_id) return &t;
  }
  return nullptr;
}

}  // namespace autexcl::cli
