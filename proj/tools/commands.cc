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

#include "commands.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "autexcl/criterion.h"
#include "autexcl/errors.h"
#include "autexcl/ingest.h"
#include "autexcl/oracle/curve_io.h"
#include "autexcl/oracle/enumerate.h"

#ifndef AUTEXCL_DEFAULT_FIXTURES_DIR
#define AUTEXCL_DEFAULT_FIXTURES_DIR "fixtures"
#endif

namespace autexcl::cli {
namespace {

namespace fs = std::filesystem;

struct WeilSource {
  std::string fixture;
  std::string dataset;
  std::string weil_file;
  std::string coeffs;
  std::uint64_t q = 0;
  std::string fixtures_dir;
};

struct NamedWeil {
  std::string id;
  WeilPolynomial poly;
};

std::string fixture_path(const std::string& dir, const std::string& id) {
  for (const fs::path& candidate :
       {fs::path(dir) / (id + ".dat"), fs::path(dir) / "hecke" / (id + ".dat")}) {
    if (fs::exists(candidate)) return candidate.string();
  }
  throw FileNotFound("no fixture " + id + ".dat under " + dir);
}

NamedWeil load_weil(const WeilSource& src) {
  const int given = !src.fixture.empty() + !src.dataset.empty() +
                    !src.weil_file.empty() + !src.coeffs.empty();
  if (given != 1) {
    throw InvalidArgument(
        "give exactly one of --fixture, --dataset, --weil, --coeffs");
  }
  if (!src.coeffs.empty()) {
    if (src.q == 0) throw InvalidArgument("--coeffs needs --q");
    std::ostringstream line;
    std::size_t commas = std::count(src.coeffs.begin(), src.coeffs.end(), ',');
    line << "weil id=inline q=" << src.q << " g=" << commas / 2
         << " coeffs=" << src.coeffs;
    WeilFile wf = parse_weil_file(line.str());
    if (auto violation = weil_validate(wf.poly)) {
      throw ValidationError("not a Weil polynomial: " + *violation);
    }
    return {wf.id, wf.poly};
  }
  if (!src.weil_file.empty()) {
    WeilFile wf = load_weil_file(src.weil_file);
    if (auto violation = weil_validate(wf.poly)) {
      throw ValidationError("not a Weil polynomial: " + *violation);
    }
    return {wf.id, wf.poly};
  }
  const std::string path =
      src.dataset.empty()
          ? fixture_path(resolve_fixtures_dir(src.fixtures_dir), src.fixture)
          : src.dataset;
  CurveDataset ds = load_dataset(path);
  return {ds.curve_id, assemble(ds)};
}

std::string bigint_str(const BigInt& v) { return v.get_str(); }

// Maps library exceptions onto the exit-code contract.
template <typename Fn>
int guarded(CommandResult& result, bool oracle, Fn&& fn) {
  try {
    return fn();
  } catch (const FileNotFound& e) {
    result.err += std::string("error: ") + e.what() + "\n";
    return kFileNotFound;
  } catch (const ParseError& e) {
    result.err += std::string("error: ") + e.what() + "\n";
    return kInputError;
  } catch (const ValidationError& e) {
    result.err += std::string("error: ") + e.what() + "\n";
    return oracle ? kOracleFailure : kInputError;
  } catch (const BudgetExceeded& e) {
    result.err += std::string("error: ") + e.what() + "\n";
    return oracle ? kOracleFailure : kInputError;
  } catch (const SingularModel& e) {
    result.err += std::string("error: ") + e.what() + "\n";
    return oracle ? kOracleFailure : kInputError;
  } catch (const Error& e) {
    result.err += std::string("error: ") + e.what() + "\n";
    return kInputError;
  }
}

void add_weil_source(CLI::App* cmd, WeilSource& src) {
  cmd->add_option("--fixture", src.fixture, "Hecke fixture id, e.g. x0plus_163");
  cmd->add_option("--dataset", src.dataset, "Hecke dataset file");
  cmd->add_option("--weil", src.weil_file, "Weil polynomial file");
  cmd->add_option("--coeffs", src.coeffs,
                  "inline Weil polynomial, ascending coefficients");
  cmd->add_option("--q", src.q, "base field size for --coeffs");
  cmd->add_option("--fixtures", src.fixtures_dir, "fixtures directory");
}

std::string verdict_row(const std::string& id, const WeilPolynomial& poly,
                        const ExclusionReport& r) {
  std::ostringstream out;
  out << id << '\t' << poly.genus() << '\t' << poly.q() << '\t'
      << r.prime_power.to_string() << '\t';
  if (const auto* ex = std::get_if<Excluded>(&r.verdict)) {
    out << "Excluded\t" << ex->crossing_index << '\t' << ex->sum_at_crossing;
  } else {
    out << "Inconclusive\t-\t" << std::get<Inconclusive>(r.verdict).final_sum;
  }
  out << '\t' << r.bound << '\n';
  return out.str();
}

RowResult evaluate_row(const TableRow& row, const std::string& fixtures_dir,
                       int n_max, Arithmetic arithmetic) {
  RowResult res(row);
  std::string path;
  try {
    path = fixture_path(fixtures_dir, row.curve_id);
  } catch (const FileNotFound& e) {
    res.status = RowStatus::kSkipped;
    res.note = e.what();
    return res;
  }
  const WeilPolynomial poly = assemble(load_dataset(path));
  res.genus = poly.genus();
  res.q = poly.q();
  ExcludeOptions opts;
  opts.n_max = std::max(n_max, row.n_to.value_or(0));
  opts.override_bound = row.override_bound;
  opts.arithmetic = arithmetic;
  const PSequence seq = p_sequence(poly, row.prime_power, opts.n_max, arithmetic);
  res.bound = row.override_bound.value_or(bound(row.prime_power, res.genus));
  std::uint64_t running = 0;
  for (int n = 1; n <= opts.n_max; ++n) {
    running += seq.at(n);
    if (running > res.bound) {
      res.n_star = n;
      break;
    }
  }
  res.scan_sum = res.n_star ? seq.sum(1, *res.n_star) : running;
  if (row.n_to) res.computed = seq.sum(row.n_from, *row.n_to);

  if (!row.expected_sum) {
    res.status = RowStatus::kInfo;
    return res;
  }
  res.status = RowStatus::kMatch;
  if (row.expected_genus && *row.expected_genus != res.genus) {
    res.status = RowStatus::kMismatch;
    res.note = "genus " + std::to_string(res.genus) + " != " +
               std::to_string(*row.expected_genus);
  }
  if (*res.computed != *row.expected_sum) res.status = RowStatus::kMismatch;
  return res;
}

int cmd_exclude(CommandResult& result, const WeilSource& src,
                const std::string& pp_text, int n_max,
                std::optional<std::uint64_t> override_bound, bool mod_only) {
  return guarded(result, false, [&] {
    const NamedWeil w = load_weil(src);
    ExcludeOptions opts;
    opts.n_max = n_max;
    opts.override_bound = override_bound;
    opts.arithmetic = mod_only ? Arithmetic::kModular : Arithmetic::kExact;
    const ExclusionReport r = exclude(w.poly, PrimePower::parse(pp_text), opts);
    result.out += verdict_row(w.id, w.poly, r);
    return r.excluded() ? kExcluded : kInconclusive;
  });
}

int cmd_reproduce(CommandResult& result, const std::string& table_id,
                  const std::string& fixtures, int n_max, bool mod_only,
                  unsigned jobs) {
  return guarded(result, false, [&] {
    const TableSpec* table = find_table(table_id);
    if (!table) {
      std::string known;
      for (const auto& t : all_tables()) known += " " + t.table_id;
      throw InvalidArgument("unknown table '" + table_id + "'; known:" + known);
    }
    auto rows = reproduce_table(*table, resolve_fixtures_dir(fixtures), n_max,
                                mod_only ? Arithmetic::kModular
                                         : Arithmetic::kExact,
                                jobs);
    result.out += format_reproduce(rows);
    bool mismatch = false, skipped = false;
    for (const auto& r : rows) {
      if (!r.note.empty()) result.err += r.row.curve_id + ": " + r.note + "\n";
      mismatch |= r.status == RowStatus::kMismatch;
      skipped |= r.status == RowStatus::kSkipped;
    }
    return mismatch ? kMismatch : skipped ? kSkipped : kOk;
  });
}

void print_series(CommandResult& result, const PointCountSeries& counts,
                  int n_max) {
  NewPointSeries r = new_point_series(counts, n_max);
  result.out += "n\tcount\tR(n)\n";
  for (int n = 1; n <= n_max; ++n) {
    result.out += std::to_string(n) + '\t' + bigint_str(counts.at(n)) + '\t' +
                  bigint_str(r.values[n - 1]) + '\n';
  }
  for (const auto& w : r.warnings) result.err += "warning: " + w + "\n";
}

int cmd_count(CommandResult& result, const WeilSource& src,
              const std::string& curve_file, int n_max, unsigned jobs) {
  const bool oracle = !curve_file.empty();
  return guarded(result, oracle, [&] {
    if (n_max < 1) throw InvalidArgument("--nmax must be >= 1");
    if (oracle) {
      CurveFile cf = load_curve_file(curve_file);
      EnumerateOptions opts;
      opts.threads = jobs;
      print_series(result, curve_point_series(cf.curve, n_max, opts), n_max);
    } else {
      print_series(result, PointCountSeries::exact(load_weil(src).poly, n_max),
                   n_max);
    }
    return kOk;
  });
}

int cmd_ingest(CommandResult& result, const std::string& dataset,
               const std::string& output) {
  return guarded(result, false, [&] {
    const CurveDataset ds = load_dataset(dataset);
    const std::string text = format_weil_file(assemble(ds), ds.curve_id);
    if (output.empty() || output == "-") {
      result.out += text;
    } else {
      std::ofstream out(output, std::ios::binary);
      if (!out) throw FileNotFound("cannot write " + output);
      out << text;
    }
    return kOk;
  });
}

// Prime powers N^j dividing `order`, j >= 1.
std::vector<PrimePower> prime_power_divisors(int order) {
  std::vector<PrimePower> out;
  for (auto p : prime_divisors(static_cast<std::uint64_t>(order))) {
    std::uint64_t pk = p;
    for (int j = 1; order % pk == 0; ++j, pk *= p) out.emplace_back(p, j);
  }
  return out;
}

int cmd_oracle(CommandResult& result, const std::string& action,
               const std::string& curve_file, int n_max,
               const std::string& pp_text, std::uint64_t budget,
               unsigned jobs) {
  return guarded(result, true, [&] {
    CurveFile cf = load_curve_file(curve_file, budget);
    for (const auto& w : cf.curve.warnings()) {
      result.err += "warning: " + w + "\n";
    }
    EnumerateOptions opts;
    opts.budget = budget;
    opts.threads = jobs;
    if (action == "count") {
      const int depth = n_max > 0 ? n_max : 2 * cf.curve.genus();
      print_series(result, curve_point_series(cf.curve, depth, opts), depth);
      return kOk;
    }
    const WeilPolynomial poly = charpoly_from_curve(cf.curve, opts);
    if (action == "zeta") {
      result.out += format_weil_file(poly, cf.id);
      return kOk;
    }
    // soundness: every verified automorphism must keep the criterion silent.
    std::vector<DeclaredMap> maps = cf.maps;
    if (maps.empty() && cf.curve.is_hyperelliptic()) {
      maps.push_back({hyperelliptic_involution(cf.curve), 2, 0});
    }
    if (maps.empty()) throw InvalidArgument("curve file declares no map");
    const int depth = n_max > 0 ? n_max : 40;
    bool all_pass = true;
    result.out += "curve_id\tmap_line\torder\tN^m\tbound\tmax_sum\tverdict\tresult\n";
    for (const auto& m : maps) {
      const int order = verify_map(cf.curve, m.map);
      if (m.order && *m.order != order) {
        throw ValidationError("map on line " + std::to_string(m.line) +
                              " has order " + std::to_string(order) +
                              ", declared " + std::to_string(*m.order));
      }
      std::vector<PrimePower> targets;
      if (!pp_text.empty()) {
        PrimePower pp = PrimePower::parse(pp_text);
        if (order % pp.modulus() != 0) {
          throw InvalidArgument("N^m = " + pp.to_string() +
                                " does not divide the map order " +
                                std::to_string(order));
        }
        targets.push_back(pp);
      } else {
        targets = prime_power_divisors(order);
      }
      for (const auto& pp : targets) {
        ExcludeOptions eo;
        eo.n_max = depth;
        const ExclusionReport r = exclude(poly, pp, eo);
        const std::uint64_t max_sum =
            r.partial_sums.empty() ? 0 : r.partial_sums.back();
        const bool pass = !r.excluded() && max_sum <= r.bound;
        all_pass &= pass;
        result.out += cf.id + '\t' + std::to_string(m.line) + '\t' +
                      std::to_string(order) + '\t' + pp.to_string() + '\t' +
                      std::to_string(r.bound) + '\t' + std::to_string(max_sum) +
                      '\t' + (r.excluded() ? "Excluded" : "Inconclusive") +
                      '\t' + (pass ? "PASS" : "FAIL") + '\n';
      }
    }
    return all_pass ? kOk : kOracleFailure;
  });
}

}  // namespace

const char* to_string(RowStatus status) {
  switch (status) {
    case RowStatus::kMatch: return "MATCH";
    case RowStatus::kMismatch: return "MISMATCH";
    case RowStatus::kSkipped: return "SKIPPED";
    case RowStatus::kInfo: return "INFO";
  }
  return "?";
}

std::string resolve_fixtures_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("AUTEXCL_FIXTURES"); env && *env) {
    return env;
  }
  return AUTEXCL_DEFAULT_FIXTURES_DIR;
}

std::vector<RowResult> reproduce_table(const TableSpec& table,
                                       const std::string& fixtures_dir,
                                       int n_max, Arithmetic arithmetic,
                                       unsigned jobs) {
  std::vector<std::optional<RowResult>> results(table.rows.size());
  std::vector<std::string> errors(table.rows.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < table.rows.size(); i = next++) {
      try {
        results[i] = evaluate_row(table.rows[i], fixtures_dir, n_max, arithmetic);
      } catch (const Error& e) {
        errors[i] = e.what();
      }
    }
  };
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, table.rows.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::vector<RowResult> out;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!errors[i].empty()) {
      throw ValidationError(table.rows[i].curve_id + ": " + errors[i]);
    }
    out.push_back(std::move(*results[i]));
  }
  return out;
}

std::string format_reproduce(const std::vector<RowResult>& rows) {
  std::ostringstream out;
  out << "curve_id\tg\tq\tN^m\tbound\trange\texpected\tcomputed\tn_star\t"
         "S(n_star)\tstatus\n";
  for (const auto& r : rows) {
    out << r.row.curve_id << '\t';
    if (r.status == RowStatus::kSkipped) {
      out << "-\t-\t" << r.row.prime_power.to_string() << "\t-\t";
    } else {
      out << r.genus << '\t' << r.q << '\t' << r.row.prime_power.to_string()
          << '\t' << r.bound << '\t';
    }
    if (r.row.n_to) {
      out << r.row.n_from << ".." << *r.row.n_to << '\t';
    } else {
      out << "-\t";
    }
    out << (r.row.expected_sum ? std::to_string(*r.row.expected_sum) : "-")
        << '\t' << (r.computed ? std::to_string(*r.computed) : "-") << '\t';
    if (r.status == RowStatus::kSkipped) {
      out << "-\t-\t";
    } else if (r.n_star) {
      out << *r.n_star << '\t' << r.scan_sum << '\t';
    } else {
      out << "-\t" << r.scan_sum << '\t';
    }
    out << to_string(r.status) << '\n';
  }
  return out.str();
}

CommandResult run_cli(const std::vector<std::string>& args) {
  CommandResult result;
  CLI::App app{"Automorphism-order exclusion from point counts over finite fields",
               "autexcl"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  WeilSource src;
  std::string pp_text;
  int n_max = kDefaultScanDepth;
  std::optional<std::uint64_t> override_bound;
  bool mod_only = true;
  unsigned jobs = 1;

  auto* exclude_cmd = app.add_subcommand("exclude", "test one Weil polynomial");
  add_weil_source(exclude_cmd, src);
  exclude_cmd->add_option("--prime-power", pp_text, "candidate order N^m")
      ->required();
  exclude_cmd->add_option("--nmax", n_max, "scan depth")->check(CLI::PositiveNumber);
  exclude_cmd->add_option("--bound-override", override_bound,
                          "cap on ramification points replacing the bound");
  exclude_cmd->add_flag("--mod-only,!--exact", mod_only,
                        "arithmetic mod N^m (default) or exact");

  std::string table_id;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "recompute a table");
  reproduce_cmd->add_option("table", table_id, "table id")->required();
  reproduce_cmd->add_option("--fixtures", src.fixtures_dir, "fixtures directory");
  reproduce_cmd->add_option("--nmax", n_max, "scan depth")->check(CLI::PositiveNumber);
  reproduce_cmd->add_option("--jobs", jobs, "worker threads");
  reproduce_cmd->add_flag("--mod-only,!--exact", mod_only,
                          "arithmetic mod N^m (default) or exact");

  std::string action, curve_file;
  std::uint64_t budget = FiniteField::kDefaultBudget;
  int oracle_n = 0;
  auto* oracle_cmd = app.add_subcommand("oracle", "enumerate a curve file");
  oracle_cmd->add_option("action", action, "count | zeta | soundness")
      ->required()
      ->check(CLI::IsMember({"count", "zeta", "soundness"}));
  oracle_cmd->add_option("curve", curve_file, "curve file")->required();
  oracle_cmd->add_option("--nmax", oracle_n, "count depth or scan depth");
  oracle_cmd->add_option("--prime-power", pp_text, "order to test (soundness)");
  oracle_cmd->add_option("--budget", budget, "largest field size enumerated");
  oracle_cmd->add_option("--jobs", jobs, "enumeration threads (0 = all cores)");

  std::string dataset, output;
  auto* ingest_cmd = app.add_subcommand("ingest", "dataset to Weil polynomial");
  ingest_cmd->add_option("dataset", dataset, "Hecke dataset file")->required();
  ingest_cmd->add_option("-o,--output", output, "output file (default stdout)");

  int count_n = 10;
  auto* count_cmd = app.add_subcommand("count", "point counts and R(n)");
  add_weil_source(count_cmd, src);
  count_cmd->add_option("--curve", curve_file, "curve file (enumerated)");
  count_cmd->add_option("--nmax", count_n, "largest n");
  count_cmd->add_option("--jobs", jobs, "enumeration threads (0 = all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  std::ostringstream out, err;
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? kOk : kInputError;
    return result;
  }

  if (exclude_cmd->parsed()) {
    result.exit_code =
        cmd_exclude(result, src, pp_text, n_max, override_bound, mod_only);
  } else if (reproduce_cmd->parsed()) {
    result.exit_code =
        cmd_reproduce(result, table_id, src.fixtures_dir, n_max, mod_only, jobs);
  } else if (oracle_cmd->parsed()) {
    result.exit_code =
        cmd_oracle(result, action, curve_file, oracle_n, pp_text, budget, jobs);
  } else if (ingest_cmd->parsed()) {
    result.exit_code = cmd_ingest(result, dataset, output);
  } else if (count_cmd->parsed()) {
    result.exit_code = cmd_count(result, src, curve_file, count_n, jobs);
  }
  return result;
}

}  // namespace autexcl::cli
