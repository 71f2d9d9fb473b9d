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

#include "autexcl/oracle/curve_io.h"

#include "autexcl/errors.h"
#include "../text.h"

namespace autexcl {
namespace {

using Element = FiniteField::Element;
using KeyValues = std::map<std::string, std::string, std::less<>>;

Element parse_element(const FiniteField& f, std::string_view s, int line) {
  std::int64_t v = text::parse_int(s, line, "field element");
  if (v < 0) {
    if (f.degree() != 1) {
      throw ParseError(line, "negative element over a non-prime field");
    }
    return f.from_int(v);
  }
  if (!f.contains(static_cast<std::uint64_t>(v))) {
    throw ParseError(line, "element " + std::to_string(v) +
                               " outside F_" + std::to_string(f.size()));
  }
  return static_cast<Element>(v);
}

FieldPoly parse_field_poly(const FiniteField& f, std::string_view s,
                           int line) {
  FieldPoly out;
  for (auto part : text::split(s, ',')) out.push_back(parse_element(f, part, line));
  fp_trim(out);
  return out;
}

std::vector<QuarticTerm> parse_quartic(const FiniteField& f, std::string_view s,
                                       int line) {
  std::vector<QuarticTerm> terms;
  for (auto part : text::split(s, ';')) {
    if (part.empty()) continue;
    const auto colon = part.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(line, "quartic term needs e1,e2,e3:coeff");
    }
    auto exps = text::split(part.substr(0, colon), ',');
    if (exps.size() != 3) {
      throw ParseError(line, "quartic monomial needs three exponents");
    }
    QuarticTerm t;
    t.ex = static_cast<int>(text::parse_int(exps[0], line, "exponent"));
    t.ey = static_cast<int>(text::parse_int(exps[1], line, "exponent"));
    t.ez = static_cast<int>(text::parse_int(exps[2], line, "exponent"));
    t.coeff = parse_element(f, part.substr(colon + 1), line);
    terms.push_back(t);
  }
  return terms;
}

std::optional<int> parse_order(const KeyValues& kv, int line) {
  auto it = kv.find("order");
  if (it == kv.end()) return std::nullopt;
  return static_cast<int>(text::parse_int(it->second, line, "order"));
}

void reject_unknown(const KeyValues& kv,
                    std::initializer_list<std::string_view> known, int line) {
  for (const auto& [key, value] : kv) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ParseError(line, "unknown key '" + key + "'");
    }
  }
}

DeclaredMap parse_map(const CurveModel& curve,
                      const std::vector<std::string_view>& ws, int line) {
  if (ws.size() < 2) throw ParseError(line, "map needs a kind");
  const KeyValues kv = text::key_values(ws, 2, line);
  const FiniteField& f = curve.field();
  if (ws[1] == "involution") {
    reject_unknown(kv, {"order"}, line);
    if (!curve.is_hyperelliptic()) {
      throw ParseError(line, "involution needs a hyperelliptic curve");
    }
    return {hyperelliptic_involution(curve), parse_order(kv, line), line};
  }
  if (ws[1] == "hyperelliptic") {
    reject_unknown(kv, {"a", "b", "c", "d", "e", "w", "order"}, line);
    HyperellipticMap m;
    m.a = parse_element(f, text::require(kv, "a", line), line);
    m.b = parse_element(f, text::require(kv, "b", line), line);
    m.c = parse_element(f, text::require(kv, "c", line), line);
    m.d = parse_element(f, text::require(kv, "d", line), line);
    m.e = parse_element(f, text::require(kv, "e", line), line);
    if (auto it = kv.find("w"); it != kv.end()) {
      for (auto part : text::split(it->second, ',')) {
        m.w.push_back(parse_element(f, part, line));
      }
    }
    return {m, parse_order(kv, line), line};
  }
  if (ws[1] == "matrix") {
    reject_unknown(kv, {"m", "order"}, line);
    auto parts = text::split(text::require(kv, "m", line), ',');
    if (parts.size() != 9) throw ParseError(line, "matrix needs 9 entries");
    ProjectiveMap m;
    for (int i = 0; i < 9; ++i) m.m[i] = parse_element(f, parts[i], line);
    return {m, parse_order(kv, line), line};
  }
  throw ParseError(line, "unknown map kind '" + std::string(ws[1]) + "'");
}

}  // namespace

CurveFile parse_curve_file(std::string_view content, std::uint64_t budget) {
  std::optional<CurveFile> out;
  for (const auto& [number, body] : text::lines(content)) {
    const auto ws = text::words(body);
    if (ws[0] == "curve") {
      if (out) throw ParseError(number, "more than one curve line");
      if (ws.size() < 2) throw ParseError(number, "curve needs a kind");
      const KeyValues kv = text::key_values(ws, 2, number);
      const auto p = text::parse_int(text::require(kv, "p", number), number, "p");
      const auto k = text::parse_int(text::require(kv, "k", number), number, "k");
      if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)) || k < 1 || k > 30) {
        throw ParseError(number, "need prime p and k >= 1");
      }
      auto field = FiniteField::create(static_cast<std::uint32_t>(p),
                                       static_cast<int>(k), budget);
      std::string id = kv.contains("id") ? kv.at("id") : "curve";
      if (ws[1] == "hyperelliptic") {
        reject_unknown(kv, {"id", "p", "k", "f", "h"}, number);
        FieldPoly f = parse_field_poly(*field, text::require(kv, "f", number), number);
        FieldPoly h;
        if (kv.contains("h")) h = parse_field_poly(*field, kv.at("h"), number);
        out.emplace(CurveFile{
            id, CurveModel::hyperelliptic(field, f, h, budget), {}});
      } else if (ws[1] == "quartic") {
        reject_unknown(kv, {"id", "p", "k", "F"}, number);
        auto terms = parse_quartic(*field, text::require(kv, "F", number), number);
        out.emplace(CurveFile{
            id, CurveModel::plane_quartic(field, terms, budget), {}});
      } else {
        throw ParseError(number, "unknown curve kind '" + std::string(ws[1]) + "'");
      }
    } else if (ws[0] == "map") {
      if (!out) throw ParseError(number, "map before curve line");
      out->maps.push_back(parse_map(out->curve, ws, number));
    } else {
      throw ParseError(number, "unknown directive '" + std::string(ws[0]) + "'");
    }
  }
  if (!out) throw ParseError(0, "no curve line");
  return std::move(*out);
}

CurveFile load_curve_file(const std::string& path, std::uint64_t budget) {
  return parse_curve_file(text::read_file(path), budget);
}

}  // namespace autexcl
