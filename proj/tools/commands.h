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

#ifndef AUTEXCL_TOOLS_COMMANDS_H_
#define AUTEXCL_TOOLS_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "autexcl/zeta.h"
#include "tables.h"

namespace autexcl::cli {

enum ExitCode : int {
  kOk = 0,
  kExcluded = 0,
  kMismatch = 1,
  kInputError = 2,
  kFileNotFound = 3,
  kOracleFailure = 4,
  kInconclusive = 10,
  kSkipped = 11,
};

struct CommandResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

// args excludes the program name.
CommandResult run_cli(const std::vector<std::string>& args);

enum class RowStatus { kMatch, kMismatch, kSkipped, kInfo };
const char* to_string(RowStatus status);

struct RowResult {
  explicit RowResult(TableRow r) : row(std::move(r)) {}

  TableRow row;
  RowStatus status = RowStatus::kSkipped;
  int genus = 0;
  std::uint64_t q = 0;
  std::uint64_t bound = 0;
  std::optional<std::uint64_t> computed;  // sum over the row's range
  std::optional<int> n_star;              // minimal crossing, if any
  std::uint64_t scan_sum = 0;             // S(n_star) or S(n_max)
  std::string note;
};

// Fixture lookup order: explicit directory, $AUTEXCL_FIXTURES, build tree.
std::string resolve_fixtures_dir(const std::string& flag_value);

// Rows are evaluated on up to `jobs` threads; output order is the table's.
std::vector<RowResult> reproduce_table(const TableSpec& table,
                                       const std::string& fixtures_dir,
                                       int n_max, Arithmetic arithmetic,
                                       unsigned jobs);

std::string format_reproduce(const std::vector<RowResult>& rows);

}  // namespace autexcl::cli

#endif  // AUTEXCL_TOOLS_COMMANDS_H_
