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

#include "autexcl/oracle/curve.h"

#include <map>
#include <tuple>

#include "autexcl/arith.h"
#include "autexcl/errors.h"

namespace autexcl {
namespace {

using Element = FiniteField::Element;

void check_elements(const FiniteField& f, const FieldPoly& a,
                    const char* what) {
  for (auto c : a) {
    if (!f.contains(c)) {
      throw InvalidArgument(std::string(what) + " has a coefficient outside F_" +
                            std::to_string(f.size()));
    }
  }
}

// Singular points of y^2 + h y = f in characteristic 2 sit above roots x0
// of h, at y0 = sqrt(f(x0)), and need f'(x0) + h'(x0) y0 = 0.
void check_char2_smooth(const std::shared_ptr<const FiniteField>& field,
                        const FieldPoly& f, const FieldPoly& h,
                        std::uint64_t budget) {
  const FieldPoly df = fp_derivative(*field, f);
  const FieldPoly dh = fp_derivative(*field, h);
  for (int d = 1; d <= fp_degree(h); ++d) {
    FieldEmbedding embed = ff_tower(field, d, budget);
    const FiniteField& e = embed.extension();
    FieldPoly fe = fp_map(embed, f), he = fp_map(embed, h);
    FieldPoly dfe = fp_map(embed, df), dhe = fp_map(embed, dh);
    for (std::uint64_t x = 0; x < e.size(); ++x) {
      const Element x0 = static_cast<Element>(x);
      if (fp_eval(e, he, x0) != 0) continue;
      const Element y0 = e.sqrt_char2(fp_eval(e, fe, x0));
      if (e.add(fp_eval(e, dfe, x0), e.mul(fp_eval(e, dhe, x0), y0)) == 0) {
        throw SingularModel("singular affine point over F_" +
                            std::to_string(e.size()) + " above a root of h");
      }
    }
  }
}

bool quartic_has_singular_point(const FiniteField& e,
                                const std::vector<QuarticTerm>& terms) {
  std::vector<std::vector<QuarticTerm>> forms = {
      terms, quartic_partial(e, terms, 0), quartic_partial(e, terms, 1),
      quartic_partial(e, terms, 2)};
  auto common = [&](int which, Element a, Element b) {
    FieldPoly g;
    for (const auto& form : forms) {
      g = fp_gcd(e, g, quartic_restrict(e, form, which, a, b));
    }
    return g;
  };
  // z = 1: free y for each x0.
  for (std::uint64_t x = 0; x < e.size(); ++x) {
    FieldPoly g = common(1, static_cast<Element>(x), 1);
    if (g.empty() || (fp_degree(g) >= 1 && fp_count_distinct_roots(e, g) > 0)) {
      return true;
    }
  }
  // (x : 1 : 0)
  FieldPoly g = common(0, 1, 0);
  if (g.empty() || (fp_degree(g) >= 1 && fp_count_distinct_roots(e, g) > 0)) {
    return true;
  }
  // (1 : 0 : 0)
  for (const auto& form : forms) {
    if (!quartic_restrict(e, form, 0, 0, 0).empty() &&
        fp_eval(e, quartic_restrict(e, form, 0, 0, 0), 1) != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

FieldPoly quartic_restrict(const FiniteField& f,
                           const std::vector<QuarticTerm>& terms, int which,
                           Element a, Element b) {
  FieldPoly out(5, 0);
  for (const auto& t : terms) {
    int exps[3] = {t.ex, t.ey, t.ez};
    int free_exp = exps[which];
    int ea = which == 0 ? exps[1] : exps[0];
    int eb = which == 2 ? exps[1] : exps[2];
    Element v = f.mul(t.coeff, f.mul(f.pow(a, static_cast<std::uint64_t>(ea)),
                                     f.pow(b, static_cast<std::uint64_t>(eb))));
    if (ea > 0 && a == 0) v = 0;
    if (eb > 0 && b == 0) v = 0;
    if (free_exp >= static_cast<int>(out.size())) out.resize(free_exp + 1, 0);
    out[free_exp] = f.add(out[free_exp], v);
  }
  fp_trim(out);
  return out;
}

std::vector<QuarticTerm> quartic_partial(const FiniteField& f,
                                         const std::vector<QuarticTerm>& terms,
                                         int var) {
  std::vector<QuarticTerm> out;
  for (auto t : terms) {
    int* e = var == 0 ? &t.ex : var == 1 ? &t.ey : &t.ez;
    if (*e == 0) continue;
    Element c = f.mul(f.from_int(*e), t.coeff);
    if (c == 0) continue;
    --*e;
    t.coeff = c;
    out.push_back(t);
  }
  return out;
}

CurveModel CurveModel::hyperelliptic(std::shared_ptr<const FiniteField> field,
                                     FieldPoly f, FieldPoly h,
                                     std::uint64_t budget) {
  const FiniteField& F = *field;
  fp_trim(f);
  fp_trim(h);
  check_elements(F, f, "f");
  check_elements(F, h, "h");
  const int df = fp_degree(f);
  if (df < 5 || df % 2 == 0) {
    throw InvalidArgument("hyperelliptic model needs odd deg f = 2g+1 >= 5, "
                          "got deg f = " + std::to_string(df));
  }
  const int g = (df - 1) / 2;
  if (fp_degree(h) > g) {
    throw InvalidArgument("deg h = " + std::to_string(fp_degree(h)) +
                          " exceeds g = " + std::to_string(g));
  }
  if (F.characteristic() != 2) {
    if (!h.empty()) {
      throw InvalidArgument("odd characteristic models must have h = 0");
    }
    if (fp_degree(fp_gcd(F, f, fp_derivative(F, f))) != 0) {
      throw SingularModel("f is not squarefree (gcd(f, f') != 1)");
    }
  } else {
    if (h.empty()) {
      throw SingularModel("characteristic 2 needs h != 0");
    }
    check_char2_smooth(field, f, h, budget);
  }
  return CurveModel(std::move(field),
                    HyperellipticEquation{std::move(f), std::move(h)}, g);
}

CurveModel CurveModel::plane_quartic(std::shared_ptr<const FiniteField> field,
                                     std::vector<QuarticTerm> terms,
                                     std::uint64_t budget) {
  const FiniteField& F = *field;
  std::map<std::tuple<int, int, int>, Element> merged;
  for (const auto& t : terms) {
    if (t.ex < 0 || t.ey < 0 || t.ez < 0 || t.ex + t.ey + t.ez != 4) {
      throw InvalidArgument("quartic monomial is not of degree 4");
    }
    if (!F.contains(t.coeff)) {
      throw InvalidArgument("quartic coefficient outside the field");
    }
    auto& slot = merged[{t.ex, t.ey, t.ez}];
    slot = F.add(slot, t.coeff);
  }
  std::vector<QuarticTerm> clean;
  for (const auto& [mono, c] : merged) {
    if (c != 0) {
      clean.push_back({std::get<0>(mono), std::get<1>(mono),
                       std::get<2>(mono), c});
    }
  }
  if (clean.empty()) throw InvalidArgument("quartic form is zero");

  // Singular points come in Galois orbits of size <= 6, so F_{q^d} with
  // d <= 6 is searched, skipping d that divides another searched degree.
  std::vector<int> degrees;
  for (int d = 1; d <= 6; ++d) {
    auto size = checked_pow(F.size(), static_cast<std::uint64_t>(d));
    if (size && *size <= budget) degrees.push_back(d);
  }
  int searched_up_to = 0;
  for (int d : degrees) {
    bool covered = false;
    for (int other : degrees) {
      if (other != d && other % d == 0) covered = true;
    }
    if (covered) continue;
    FieldEmbedding embed = ff_tower(field, d, budget);
    std::vector<QuarticTerm> mapped = clean;
    for (auto& t : mapped) t.coeff = embed(t.coeff);
    if (quartic_has_singular_point(embed.extension(), mapped)) {
      throw SingularModel("plane quartic has a singular point over F_" +
                          std::to_string(embed.extension().size()));
    }
    searched_up_to = std::max(searched_up_to, d);
  }
  CurveModel model(std::move(field), PlaneQuarticEquation{std::move(clean)},
                   3);
  model.warnings_.push_back(
      "plane quartic smoothness checked by singular-point search over "
      "F_{q^d}, d <= " + std::to_string(searched_up_to) + "; not a proof");
  return model;
}

}  // namespace autexcl
