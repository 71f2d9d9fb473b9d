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

#include "autexcl/oracle/finite_field.h"

#include <map>
#include <mutex>
#include <utility>

#include "autexcl/arith.h"
#include "autexcl/errors.h"

namespace autexcl {
namespace {

using PrimePoly = std::vector<std::uint32_t>;  // ascending, over F_p

// Remainder of a modulo the monic polynomial m over F_p.
PrimePoly rem_monic(PrimePoly a, std::span<const std::uint32_t> m,
                    std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = a.size(); i-- > dm;) {
    const std::uint64_t t = a[i];
    if (t == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) {
      std::uint64_t sub = t * m[j] % p;
      std::size_t idx = i - dm + j;
      a[idx] = static_cast<std::uint32_t>((a[idx] + p - sub) % p);
    }
  }
  a.resize(std::min(a.size(), dm));
  return a;
}

bool all_zero(const PrimePoly& a) {
  for (auto c : a) {
    if (c) return false;
  }
  return true;
}

std::uint64_t checked_size(std::uint32_t p, int k, std::uint64_t budget) {
  if (!is_prime(p)) {
    throw InvalidArgument("field characteristic " + std::to_string(p) +
                          " is not prime");
  }
  if (k < 1) throw InvalidArgument("field degree must be >= 1");
  auto size = checked_pow(p, static_cast<std::uint64_t>(k));
  if (!size || *size > budget || *size > UINT32_MAX) {
    throw BudgetExceeded("field F_" + std::to_string(p) + "^" +
                         std::to_string(k) + " exceeds the enumeration budget " +
                         std::to_string(budget));
  }
  return *size;
}

}  // namespace

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
  if (poly.size() < 2 || poly.back() != 1) {
    throw InvalidArgument("is_irreducible expects a monic polynomial");
  }
  const int k = static_cast<int>(poly.size()) - 1;
  if (k == 1) return true;
  PrimePoly target(poly.begin(), poly.end());
  for (int d = 1; d <= k / 2; ++d) {
    const std::uint64_t count = *checked_pow(p, static_cast<std::uint64_t>(d));
    PrimePoly divisor(static_cast<std::size_t>(d) + 1, 0);
    divisor[d] = 1;
    for (std::uint64_t t = 0; t < count; ++t) {
      std::uint64_t v = t;
      for (int i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      // Divides `target` iff target mod divisor == 0.
      if (all_zero(rem_monic(target, divisor, p))) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, int k) {
  const std::uint64_t count = *checked_pow(p, static_cast<std::uint64_t>(k));
  PrimePoly candidate(static_cast<std::size_t>(k) + 1, 0);
  candidate[k] = 1;
  for (std::uint64_t t = 0; t < count; ++t) {
    // c_0 is the most significant digit of t.
    std::uint64_t v = t;
    for (int i = k - 1; i >= 0; --i) {
      candidate[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    if (is_irreducible(p, candidate)) return candidate;
  }
  throw Error("no irreducible polynomial of degree " + std::to_string(k) +
              " over F_" + std::to_string(p));
}

std::shared_ptr<const FiniteField> FiniteField::create(std::uint32_t p, int k,
                                                       std::uint64_t budget) {
  checked_size(p, k, budget);
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, int>,
                  std::shared_ptr<const FiniteField>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, k}];
  if (!slot) {
    slot = std::shared_ptr<const FiniteField>(
        new FiniteField(p, canonical_modulus(p, k)));
  }
  return slot;
}

std::shared_ptr<const FiniteField> FiniteField::with_modulus(
    std::uint32_t p, std::vector<std::uint32_t> modulus,
    std::uint64_t budget) {
  if (modulus.size() < 2) throw InvalidArgument("modulus degree must be >= 1");
  checked_size(p, static_cast<int>(modulus.size()) - 1, budget);
  for (auto c : modulus) {
    if (c >= p) throw InvalidArgument("modulus coefficient out of range");
  }
  if (modulus.back() != 1 || !is_irreducible(p, modulus)) {
    throw InvalidArgument("field modulus is not monic irreducible");
  }
  return std::shared_ptr<const FiniteField>(
      new FiniteField(p, std::move(modulus)));
}

FiniteField::FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p),
      k_(static_cast<int>(modulus.size()) - 1),
      size_(*checked_pow(p, modulus.size() - 1)),
      modulus_(std::move(modulus)) {
  place_.resize(static_cast<std::size_t>(k_) + 1);
  place_[0] = 1;
  for (int i = 1; i <= k_; ++i) place_[i] = place_[i - 1] * p_;

  // Primitive element: order exactly size - 1.
  const std::uint64_t order = size_ - 1;
  const auto primes = prime_divisors(order);
  for (Element c = 1; c < size_; ++c) {
    bool primitive = true;
    for (auto r : primes) {
      if (slow_pow(c, order / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator_ = c;
      break;
    }
  }
  if (size_ <= kTableLimit) build_tables();

  basis_trace_.resize(static_cast<std::size_t>(k_));
  for (int i = 0; i < k_; ++i) {
    Element b = static_cast<Element>(place_[i]);
    Element t = 0;
    Element frob = b;
    for (int j = 0; j < k_; ++j) {
      t = add(t, frob);
      frob = pow(frob, p_);
    }
    basis_trace_[i] = t;  // lies in F_p, so the packed value is the integer
  }
}

void FiniteField::build_tables() {
  const std::uint64_t order = size_ - 1;
  log_.assign(size_, 0);
  exp_.assign(2 * order, 0);
  Element x = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    exp_[i] = x;
    exp_[i + order] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = slow_mul(x, generator_);
  }
}

FiniteField::Element FiniteField::add(Element a, Element b) const {
  if (p_ == 2) return a ^ b;
  if (k_ == 1) {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element r = 0;
  for (int i = 0; i < k_; ++i) {
    std::uint32_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    std::uint32_t s = da + db;
    if (s >= p_) s -= p_;
    r += static_cast<Element>(s * place_[i]);
  }
  return r;
}

FiniteField::Element FiniteField::neg(Element a) const {
  if (p_ == 2) return a;
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  Element r = 0;
  for (int i = 0; i < k_; ++i) {
    std::uint32_t d = a % p_;
    a /= p_;
    r += static_cast<Element>((d == 0 ? 0 : p_ - d) * place_[i]);
  }
  return r;
}

FiniteField::Element FiniteField::sub(Element a, Element b) const {
  return add(a, neg(b));
}

FiniteField::Element FiniteField::slow_mul(Element a, Element b) const {
  if (p_ == 2) {
    // Carry-less multiply with on-the-fly reduction.
    std::uint64_t mod_bits = 0;
    for (int i = 0; i < k_; ++i) {
      if (modulus_[i]) mod_bits |= std::uint64_t{1} << i;
    }
    const std::uint64_t top = std::uint64_t{1} << k_;
    std::uint64_t x = a, r = 0;
    while (b) {
      if (b & 1) r ^= x;
      b >>= 1;
      x <<= 1;
      if (x & top) x ^= top | mod_bits;
    }
    return static_cast<Element>(r);
  }
  auto ca = coordinates(a), cb = coordinates(b);
  PrimePoly prod(static_cast<std::size_t>(2 * k_ - 1), 0);
  for (int i = 0; i < k_; ++i) {
    if (!ca[i]) continue;
    for (int j = 0; j < k_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p_);
    }
  }
  auto r = rem_monic(std::move(prod), modulus_, p_);
  r.resize(static_cast<std::size_t>(k_), 0);
  return from_coordinates(r);
}

FiniteField::Element FiniteField::slow_pow(Element a, std::uint64_t e) const {
  Element r = 1;
  while (e) {
    if (e & 1) r = slow_mul(r, a);
    a = slow_mul(a, a);
    e >>= 1;
  }
  return r;
}

FiniteField::Element FiniteField::mul(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) return exp_[log_[a] + log_[b]];
  return slow_mul(a, b);
}

FiniteField::Element FiniteField::inv(Element a) const {
  if (a == 0) throw InvalidArgument("inverse of zero");
  if (!exp_.empty()) return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
  return slow_pow(a, size_ - 2);
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (!exp_.empty()) {
    const std::uint64_t order = size_ - 1;
    return exp_[static_cast<std::uint64_t>(log_[a]) * (e % order) % order];
  }
  return slow_pow(a, e);
}

FiniteField::Element FiniteField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

std::vector<std::uint32_t> FiniteField::coordinates(Element a) const {
  std::vector<std::uint32_t> out(static_cast<std::size_t>(k_));
  for (int i = 0; i < k_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

FiniteField::Element FiniteField::from_coordinates(
    std::span<const std::uint32_t> coords) const {
  Element r = 0;
  for (std::size_t i = 0; i < coords.size() && i < place_.size(); ++i) {
    r += static_cast<Element>((coords[i] % p_) * place_[i]);
  }
  return r;
}

bool FiniteField::is_square(Element a) const {
  if (a == 0 || p_ == 2) return true;
  if (!exp_.empty()) return log_[a] % 2 == 0;
  return slow_pow(a, (size_ - 1) / 2) == 1;
}

FiniteField::Element FiniteField::sqrt_char2(Element a) const {
  if (p_ != 2) throw InvalidArgument("sqrt_char2 needs characteristic 2");
  return pow(a, size_ / 2);
}

std::uint32_t FiniteField::absolute_trace(Element a) const {
  std::uint64_t t = 0;
  for (int i = 0; i < k_; ++i) {
    t += static_cast<std::uint64_t>(a % p_) * basis_trace_[i];
    a /= p_;
  }
  return static_cast<std::uint32_t>(t % p_);
}

FieldEmbedding::FieldEmbedding(std::shared_ptr<const FiniteField> base,
                               std::shared_ptr<const FiniteField> extension)
    : base_(std::move(base)), extension_(std::move(extension)) {
  const FiniteField& b = *base_;
  const FiniteField& e = *extension_;
  if (b.characteristic() != e.characteristic() ||
      e.degree() % b.degree() != 0) {
    throw InvalidArgument("extension degree is not a multiple of base degree");
  }
  const auto& m = b.modulus();
  powers_.resize(static_cast<std::size_t>(b.degree()));
  if (base_ == extension_) {
    // Identity: beta itself, whose packed form is p (or -c_0 when k = 1).
    root_ = b.degree() >= 2 ? static_cast<Element>(b.characteristic())
                            : b.neg(b.from_int(m[0]));
    Element r = 1;
    for (int i = 0; i < b.degree(); ++i) {
      powers_[i] = r;
      r = b.mul(r, root_);
    }
    return;
  }
  bool found = false;
  for (std::uint64_t x = 0; x < e.size(); ++x) {
    Element acc = 0;
    for (std::size_t i = m.size(); i-- > 0;) {
      acc = e.add(e.mul(acc, static_cast<Element>(x)), e.from_int(m[i]));
    }
    if (acc == 0) {
      root_ = static_cast<Element>(x);
      found = true;
      break;
    }
  }
  if (!found) {
    throw Error("no root of the base modulus in the extension field");
  }
  Element r = 1;
  for (int i = 0; i < b.degree(); ++i) {
    powers_[i] = r;
    r = e.mul(r, root_);
  }
}

FieldEmbedding::Element FieldEmbedding::operator()(Element a) const {
  const FiniteField& e = *extension_;
  const std::uint32_t p = base_->characteristic();
  Element r = 0;
  for (int i = 0; i < base_->degree(); ++i) {
    std::uint32_t digit = a % p;
    a /= p;
    if (digit) r = e.add(r, e.mul(e.from_int(digit), powers_[i]));
  }
  return r;
}

FieldEmbedding ff_tower(const std::shared_ptr<const FiniteField>& base, int n,
                        std::uint64_t budget) {
  if (n < 1) throw InvalidArgument("tower degree must be >= 1");
  if (n == 1) return FieldEmbedding(base, base);
  auto ext = FiniteField::create(base->characteristic(), base->degree() * n,
                                 budget);
  return FieldEmbedding(base, ext);
}

}  // namespace autexcl
