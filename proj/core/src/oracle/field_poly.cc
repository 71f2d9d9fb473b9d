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

#include "autexcl/oracle/field_poly.h"

#include <algorithm>

#include "autexcl/errors.h"

namespace autexcl {

void fp_trim(FieldPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FieldPoly fp_add(const FiniteField& f, const FieldPoly& a, const FieldPoly& b) {
  FieldPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  fp_trim(r);
  return r;
}

FieldPoly fp_sub(const FiniteField& f, const FieldPoly& a, const FieldPoly& b) {
  FieldPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = f.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  fp_trim(r);
  return r;
}

FieldPoly fp_mul(const FiniteField& f, const FieldPoly& a, const FieldPoly& b) {
  if (a.empty() || b.empty()) return {};
  FieldPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
  }
  fp_trim(r);
  return r;
}

FieldPoly fp_scale(const FiniteField& f, const FieldPoly& a,
                   FiniteField::Element c) {
  FieldPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
  fp_trim(r);
  return r;
}

std::pair<FieldPoly, FieldPoly> fp_divmod(const FiniteField& f,
                                          const FieldPoly& a,
                                          const FieldPoly& b) {
  if (b.empty()) throw InvalidArgument("polynomial division by zero");
  FieldPoly rem = a;
  fp_trim(rem);
  const int db = fp_degree(b);
  if (fp_degree(rem) < db) return {{}, rem};
  FieldPoly quot(rem.size() - b.size() + 1, 0);
  const auto lead_inv = f.inv(b.back());
  for (int i = fp_degree(rem); i >= db; --i) {
    const auto t = f.mul(rem[i], lead_inv);
    quot[i - db] = t;
    if (t == 0) continue;
    for (int j = 0; j <= db; ++j) {
      rem[i - db + j] = f.sub(rem[i - db + j], f.mul(t, b[j]));
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  fp_trim(rem);
  fp_trim(quot);
  return {quot, rem};
}

FieldPoly fp_mod(const FiniteField& f, const FieldPoly& a, const FieldPoly& b) {
  return fp_divmod(f, a, b).second;
}

FieldPoly fp_gcd(const FiniteField& f, FieldPoly a, FieldPoly b) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FieldPoly r = fp_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = fp_scale(f, a, f.inv(a.back()));
  return a;
}

FieldPoly fp_derivative(const FiniteField& f, const FieldPoly& a) {
  if (a.size() <= 1) return {};
  FieldPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) {
    r[i - 1] = f.mul(f.from_int(static_cast<std::int64_t>(i)), a[i]);
  }
  fp_trim(r);
  return r;
}

FiniteField::Element fp_eval(const FiniteField& f, const FieldPoly& a,
                             FiniteField::Element x) {
  FiniteField::Element acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
  return acc;
}

FieldPoly fp_map(const FieldEmbedding& embed, const FieldPoly& a) {
  FieldPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = embed(a[i]);
  fp_trim(r);
  return r;
}

std::uint64_t fp_count_distinct_roots(const FiniteField& f,
                                      const FieldPoly& a_in) {
  FieldPoly a = a_in;
  fp_trim(a);
  if (a.empty()) return f.size();
  if (a.size() == 1) return 0;
  if (a.size() == 2) return 1;
  // y^{p^k} mod a by k successive p-th powers.
  FieldPoly r = fp_mod(f, FieldPoly{0, 1}, a);
  for (int step = 0; step < f.degree(); ++step) {
    FieldPoly base = r;
    FieldPoly acc{1};
    std::uint32_t e = f.characteristic();
    while (e) {
      if (e & 1) acc = fp_mod(f, fp_mul(f, acc, base), a);
      e >>= 1;
      if (e) base = fp_mod(f, fp_mul(f, base, base), a);
    }
    r = std::move(acc);
  }
  FieldPoly diff = fp_sub(f, r, FieldPoly{0, 1});
  return static_cast<std::uint64_t>(fp_degree(fp_gcd(f, a, diff)));
}

}  // namespace autexcl
