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

#include "autexcl/ingest.h"

#include "autexcl/errors.h"
#include "text.h"

namespace autexcl {
namespace {

IntPolynomial parse_int_poly(std::string_view s, int line, std::string_view what) {
  std::vector<BigInt> coeffs;
  for (auto part : text::split(s, ',')) {
    coeffs.push_back(text::parse_big(part, line, what));
  }
  return IntPolynomial(std::move(coeffs));
}

HeckeRecord parse_record(const std::vector<std::string_view>& ws, int line,
                         std::uint64_t ell) {
  const auto kv = text::key_values(ws, 1, line);
  for (const auto& [key, value] : kv) {
    if (key != "label" && key != "level" && key != "al" && key != "h" &&
        key != "mult") {
      throw ParseError(line, "unknown record key '" + key + "'");
    }
  }
  HeckeRecord r;
  r.line = line;
  r.ell = ell;
  r.label = text::require(kv, "label", line);
  const auto level = text::parse_int(text::require(kv, "level", line), line, "level");
  if (level < 1) throw ParseError(line, "level must be positive");
  r.level = static_cast<std::uint64_t>(level);
  const std::string& al = text::require(kv, "al", line);
  if (al == "+1" || al == "1") {
    r.al_sign = 1;
  } else if (al == "-1") {
    r.al_sign = -1;
  } else {
    throw ParseError(line, "al must be +1 or -1");
  }
  if (kv.contains("mult")) {
    r.mult = static_cast<int>(text::parse_int(kv.at("mult"), line, "mult"));
    if (r.mult < 1) throw ParseError(line, "mult must be positive");
  }
  r.h = parse_int_poly(text::require(kv, "h", line), line, "h");
  if (!r.h.is_monic() || r.h.degree() < 1) {
    throw ParseError(line, "h must be monic of degree >= 1 (got " +
                               r.h.to_string() + ")");
  }
  if (r.level % ell == 0) {
    throw ParseError(line, "ell = " + std::to_string(ell) +
                               " divides level " + std::to_string(r.level));
  }
  // Roots of h must satisfy |t| <= 2 sqrt(ell); equivalently the
  // Eichler-Shimura factor is a Weil polynomial over ell.
  if (auto violation = weil_validate(hecke_to_frobenius(r.h, ell, 1))) {
    throw ParseError(line, "Hecke-Weil bound fails for " + r.label + ": " +
                               *violation);
  }
  return r;
}

}  // namespace

CurveDataset parse_dataset(std::string_view content) {
  CurveDataset ds;
  bool have_genus = false;
  for (const auto& [number, body] : text::lines(content)) {
    const auto ws = text::words(body);
    if (ws[0] == "record") {
      if (ds.ell == 0) throw ParseError(number, "record before ell=");
      ds.records.push_back(parse_record(ws, number, ds.ell));
      continue;
    }
    if (ws.size() != 1) throw ParseError(number, "expected a single key=value");
    const auto eq = ws[0].find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(number, "unknown directive '" + std::string(ws[0]) + "'");
    }
    const std::string_view key = ws[0].substr(0, eq);
    const std::string_view value = ws[0].substr(eq + 1);
    if (key == "curve_id") {
      ds.curve_id = std::string(value);
    } else if (key == "expected_genus") {
      ds.expected_genus = static_cast<int>(text::parse_int(value, number, key));
      have_genus = true;
    } else if (key == "ell") {
      if (!ds.records.empty()) throw ParseError(number, "ell= after records");
      const auto ell = text::parse_int(value, number, key);
      if (ell < 2 || !is_prime(static_cast<std::uint64_t>(ell))) {
        throw ParseError(number, "ell must be prime");
      }
      ds.ell = static_cast<std::uint64_t>(ell);
    } else if (key == "base_change_k") {
      ds.base_change_k = static_cast<int>(text::parse_int(value, number, key));
      if (ds.base_change_k < 1) throw ParseError(number, "base_change_k >= 1");
    } else {
      throw ParseError(number, "unknown key '" + std::string(key) + "'");
    }
  }
  if (ds.curve_id.empty()) throw ParseError(0, "missing curve_id=");
  if (!have_genus) throw ParseError(0, "missing expected_genus=");
  if (ds.ell == 0) throw ParseError(0, "missing ell=");
  if (ds.records.empty()) throw ParseError(0, "dataset has no records");
  int found = 0;
  for (const auto& r : ds.records) found += r.mult * r.h.degree();
  if (found != ds.expected_genus) {
    throw ValidationError("genus mismatch for " + ds.curve_id +
                          ": expected_genus=" +
                          std::to_string(ds.expected_genus) +
                          " but records sum to " + std::to_string(found));
  }
  return ds;
}

CurveDataset load_dataset(const std::string& path) {
  return parse_dataset(text::read_file(path));
}

WeilPolynomial assemble(const CurveDataset& ds) {
  std::vector<WeilPolynomial> factors;
  for (const auto& r : ds.records) {
    factors.push_back(hecke_to_frobenius(r.h, ds.ell, r.mult));
  }
  WeilPolynomial q = weil_base_change(poly_product(factors), ds.base_change_k);
  if (q.genus() != ds.expected_genus) {
    throw ValidationError("assembled genus " + std::to_string(q.genus()) +
                          " differs from expected " +
                          std::to_string(ds.expected_genus));
  }
  if (auto violation = weil_validate(q)) {
    throw ValidationError(ds.curve_id + ": " + *violation);
  }
  return q;
}

WeilFile parse_weil_file(std::string_view content) {
  std::optional<WeilFile> out;
  for (const auto& [number, body] : text::lines(content)) {
    const auto ws = text::words(body);
    if (ws[0] != "weil") {
      throw ParseError(number, "unknown directive '" + std::string(ws[0]) + "'");
    }
    if (out) throw ParseError(number, "more than one weil line");
    const auto kv = text::key_values(ws, 1, number);
    for (const auto& [key, value] : kv) {
      if (key != "id" && key != "q" && key != "g" && key != "coeffs") {
        throw ParseError(number, "unknown key '" + key + "'");
      }
    }
    const auto q = text::parse_int(text::require(kv, "q", number), number, "q");
    const auto g = text::parse_int(text::require(kv, "g", number), number, "g");
    IntPolynomial poly =
        parse_int_poly(text::require(kv, "coeffs", number), number, "coeffs");
    if (q < 2) throw ParseError(number, "q must be a prime power");
    if (poly.degree() != 2 * g) {
      throw ParseError(number, "coeffs have degree " +
                                   std::to_string(poly.degree()) +
                                   ", expected 2g = " + std::to_string(2 * g));
    }
    try {
      out.emplace(WeilFile{kv.contains("id") ? kv.at("id") : "weil",
                           WeilPolynomial(static_cast<std::uint64_t>(q),
                                          std::move(poly))});
    } catch (const InvalidArgument& err) {
      throw ParseError(number, err.what());
    }
  }
  if (!out) throw ParseError(0, "no weil line");
  return std::move(*out);
}

WeilFile load_weil_file(const std::string& path) {
  return parse_weil_file(text::read_file(path));
}

std::string format_weil_file(const WeilPolynomial& poly, const std::string& id) {
  std::string out = "weil ";
  if (!id.empty()) out += "id=" + id + " ";
  out += "q=" + std::to_string(poly.q()) + " g=" + std::to_string(poly.genus()) +
         " coeffs=" + poly.poly().to_string() + "\n";
  return out;
}

}  // namespace autexcl
