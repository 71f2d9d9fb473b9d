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

#include "autexcl/oracle/curve_map.h"

#include <map>
#include <string>

#include "autexcl/errors.h"

namespace autexcl {
namespace {

using Element = FiniteField::Element;

// Binary forms of a fixed degree D: index i holds the coefficient of
// X^i Z^{D-i}. Unlike FieldPoly these are never trimmed.
using Form = std::vector<Element>;

Form form_mul(const FiniteField& f, const Form& a, const Form& b) {
  Form r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
  }
  return r;
}

Form form_add(const FiniteField& f, const Form& a, const Form& b) {
  Form r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  return r;
}

Form form_scale(const FiniteField& f, const Form& a, Element c) {
  Form r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
  return r;
}

Form homogenize(const FieldPoly& p, int degree) {
  if (fp_degree(p) > degree) {
    throw InvalidArgument("polynomial degree exceeds form degree");
  }
  Form r(static_cast<std::size_t>(degree + 1), 0);
  std::copy(p.begin(), p.end(), r.begin());
  return r;
}

// P(aX + bZ, cX + dZ).
Form substitute(const FiniteField& f, const Form& p, Element a, Element b,
                Element c, Element d) {
  const int degree = static_cast<int>(p.size()) - 1;
  std::vector<Form> u_pow{{1}}, v_pow{{1}};
  for (int i = 1; i <= degree; ++i) {
    u_pow.push_back(form_mul(f, u_pow.back(), Form{b, a}));
    v_pow.push_back(form_mul(f, v_pow.back(), Form{d, c}));
  }
  Form r(p.size(), 0);
  for (int i = 0; i <= degree; ++i) {
    if (p[i] == 0) continue;
    r = form_add(f, r, form_scale(f, form_mul(f, u_pow[i], v_pow[degree - i]),
                                  p[i]));
  }
  return r;
}

struct WeightedModel {
  Form h;  // degree g + 1
  Form f;  // degree 2g + 2
};

WeightedModel weighted(const CurveModel& curve) {
  const int g = curve.genus();
  return {homogenize(curve.hyperelliptic().h, g + 1),
          homogenize(curve.hyperelliptic().f, 2 * g + 2)};
}

Form padded_w(const CurveModel& curve, const HyperellipticMap& map) {
  const std::size_t len = static_cast<std::size_t>(curve.genus() + 2);
  if (map.w.size() > len) {
    throw InvalidArgument("W has more than g + 2 coefficients");
  }
  Form w = map.w;
  w.resize(len, 0);
  return w;
}

bool preserves(const CurveModel& curve, const HyperellipticMap& map) {
  const FiniteField& f = curve.field();
  for (Element v : {map.a, map.b, map.c, map.d, map.e}) {
    if (!f.contains(v)) return false;
  }
  if (f.sub(f.mul(map.a, map.d), f.mul(map.b, map.c)) == 0 || map.e == 0) {
    return false;
  }
  const WeightedModel model = weighted(curve);
  const Form w = padded_w(curve, map);
  const Form hl = substitute(f, model.h, map.a, map.b, map.c, map.d);
  const Form fl = substitute(f, model.f, map.a, map.b, map.c, map.d);
  // Y coefficient: 2W + H(L) = e H.
  Form lin = form_add(f, form_add(f, w, w), hl);
  if (lin != form_scale(f, model.h, map.e)) return false;
  // Constant coefficient: W^2 + H(L) W - F(L) = -e^2 F.
  Form con = form_add(f, form_add(f, form_mul(f, w, w), form_mul(f, hl, w)),
                      form_scale(f, fl, f.neg(1)));
  return con == form_scale(f, model.f, f.neg(f.mul(map.e, map.e)));
}

HyperellipticMap compose(const CurveModel& curve, const HyperellipticMap& m2,
                         const HyperellipticMap& m1) {
  const FiniteField& f = curve.field();
  HyperellipticMap r;
  r.a = f.add(f.mul(m2.a, m1.a), f.mul(m2.b, m1.c));
  r.b = f.add(f.mul(m2.a, m1.b), f.mul(m2.b, m1.d));
  r.c = f.add(f.mul(m2.c, m1.a), f.mul(m2.d, m1.c));
  r.d = f.add(f.mul(m2.c, m1.b), f.mul(m2.d, m1.d));
  r.e = f.mul(m2.e, m1.e);
  r.w = form_add(f, form_scale(f, padded_w(curve, m1), m2.e),
                 substitute(f, padded_w(curve, m2), m1.a, m1.b, m1.c, m1.d));
  return r;
}

// Identity on weighted projective space: (lX : lambda^{g+1} Y : lZ).
bool is_identity(const CurveModel& curve, const HyperellipticMap& m) {
  const FiniteField& f = curve.field();
  if (m.b != 0 || m.c != 0 || m.a != m.d) return false;
  if (m.e != f.pow(m.a, static_cast<std::uint64_t>(curve.genus() + 1))) {
    return false;
  }
  for (Element c : m.w) {
    if (c != 0) return false;
  }
  return true;
}

using Monomial = std::array<int, 3>;
using TriPoly = std::map<Monomial, Element>;

TriPoly tri_mul(const FiniteField& f, const TriPoly& a, const TriPoly& b) {
  TriPoly r;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Monomial m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
      r[m] = f.add(r[m], f.mul(ca, cb));
    }
  }
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

TriPoly tri_pow(const FiniteField& f, const TriPoly& a, int e) {
  TriPoly r{{Monomial{0, 0, 0}, 1}};
  for (int i = 0; i < e; ++i) r = tri_mul(f, r, a);
  return r;
}

bool preserves(const CurveModel& curve, const ProjectiveMap& map) {
  const FiniteField& f = curve.field();
  const auto& m = map.m;
  for (Element v : m) {
    if (!f.contains(v)) return false;
  }
  auto minor = [&](int r0, int r1, int c0, int c1) {
    return f.sub(f.mul(m[3 * r0 + c0], m[3 * r1 + c1]),
                 f.mul(m[3 * r0 + c1], m[3 * r1 + c0]));
  };
  Element det = f.add(f.sub(f.mul(m[0], minor(1, 2, 1, 2)),
                            f.mul(m[1], minor(1, 2, 0, 2))),
                      f.mul(m[2], minor(1, 2, 0, 1)));
  if (det == 0) return false;

  std::array<TriPoly, 3> rows;
  for (int r = 0; r < 3; ++r) {
    if (m[3 * r] != 0) rows[r][{1, 0, 0}] = m[3 * r];
    if (m[3 * r + 1] != 0) rows[r][{0, 1, 0}] = m[3 * r + 1];
    if (m[3 * r + 2] != 0) rows[r][{0, 0, 1}] = m[3 * r + 2];
  }
  TriPoly image, original;
  for (const auto& t : curve.quartic().terms) {
    original[{t.ex, t.ey, t.ez}] = t.coeff;
    TriPoly term = tri_mul(
        f, tri_mul(f, tri_pow(f, rows[0], t.ex), tri_pow(f, rows[1], t.ey)),
        tri_pow(f, rows[2], t.ez));
    for (const auto& [mono, c] : term) {
      image[mono] = f.add(image[mono], f.mul(c, t.coeff));
    }
  }
  std::erase_if(image, [](const auto& kv) { return kv.second == 0; });
  if (image.size() != original.size()) return false;
  const auto& [mono0, c0] = *original.begin();
  auto it = image.find(mono0);
  if (it == image.end()) return false;
  const Element lambda = f.div(it->second, c0);
  for (const auto& [mono, c] : original) {
    auto found = image.find(mono);
    if (found == image.end() || found->second != f.mul(lambda, c)) {
      return false;
    }
  }
  return true;
}

ProjectiveMap mat_mul(const FiniteField& f, const ProjectiveMap& x,
                      const ProjectiveMap& y) {
  ProjectiveMap r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Element acc = 0;
      for (int k = 0; k < 3; ++k) {
        acc = f.add(acc, f.mul(x.m[3 * i + k], y.m[3 * k + j]));
      }
      r.m[3 * i + j] = acc;
    }
  }
  return r;
}

bool is_scalar(const ProjectiveMap& x) {
  const auto& m = x.m;
  return m[1] == 0 && m[2] == 0 && m[3] == 0 && m[5] == 0 && m[6] == 0 &&
         m[7] == 0 && m[0] == m[4] && m[4] == m[8] && m[0] != 0;
}

}  // namespace

HyperellipticMap hyperelliptic_involution(const CurveModel& curve) {
  const FiniteField& f = curve.field();
  HyperellipticMap map;
  map.e = f.neg(1);
  map.w = homogenize(curve.hyperelliptic().h, curve.genus() + 1);
  for (auto& c : map.w) c = f.neg(c);
  return map;
}

bool preserves_curve(const CurveModel& curve, const CurveMap& map) {
  if (const auto* hm = std::get_if<HyperellipticMap>(&map)) {
    if (!curve.is_hyperelliptic()) {
      throw InvalidArgument("hyperelliptic map applied to a plane quartic");
    }
    return preserves(curve, *hm);
  }
  if (curve.is_hyperelliptic()) {
    throw InvalidArgument("matrix map applied to a hyperelliptic model");
  }
  return preserves(curve, std::get<ProjectiveMap>(map));
}

int verify_map(const CurveModel& curve, const CurveMap& map, int cap) {
  if (!preserves_curve(curve, map)) {
    throw ValidationError("map does not preserve the curve equation");
  }
  if (const auto* hm = std::get_if<HyperellipticMap>(&map)) {
    HyperellipticMap power = *hm;
    power.w = padded_w(curve, *hm);
    for (int k = 1; k <= cap; ++k) {
      if (is_identity(curve, power)) return k;
      power = compose(curve, *hm, power);
    }
  } else {
    const auto& pm = std::get<ProjectiveMap>(map);
    ProjectiveMap power = pm;
    for (int k = 1; k <= cap; ++k) {
      if (is_scalar(power)) return k;
      power = mat_mul(curve.field(), pm, power);
    }
  }
  throw ValidationError("map order exceeds cap " + std::to_string(cap));
}

}  // namespace autexcl
