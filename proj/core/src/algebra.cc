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

#include "autexcl/algebra.h"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <utility>

#include "autexcl/errors.h"

namespace autexcl {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += coeffs_[i].get_str();
  }
  return out;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial pow(const IntPolynomial& base, int exp) {
  IntPolynomial result{1};
  IntPolynomial b = base;
  while (exp > 0) {
    if (exp & 1) result = result * b;
    exp >>= 1;
    if (exp > 0) b = b * b;
  }
  return result;
}

WeilPolynomial::WeilPolynomial(std::uint64_t q, IntPolynomial poly)
    : q_(q), poly_(std::move(poly)) {
  if (!prime_power_base(q_)) {
    throw InvalidArgument("q = " + std::to_string(q_) +
                          " is not a prime power");
  }
  if (!poly_.is_monic()) {
    throw InvalidArgument("Weil polynomial must be monic: " +
                          poly_.to_string());
  }
  if (poly_.degree() < 2 || poly_.degree() % 2 != 0) {
    throw InvalidArgument("Weil polynomial must have even degree >= 2, got " +
                          std::to_string(poly_.degree()));
  }
}

PrimePower::PrimePower(std::uint64_t prime, int exponent)
    : prime_(prime), exponent_(exponent), modulus_(0) {
  if (!is_prime(prime_)) {
    throw InvalidArgument("N = " + std::to_string(prime_) + " is not prime");
  }
  if (exponent_ < 1) {
    throw InvalidArgument("exponent m must be >= 1");
  }
  auto m = checked_pow(prime_, static_cast<std::uint64_t>(exponent_));
  if (!m || *m > (std::uint64_t{1} << 62)) {
    throw InvalidArgument("N^m too large");
  }
  modulus_ = *m;
}

PrimePower PrimePower::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) -> std::uint64_t {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      throw InvalidArgument("malformed prime power '" + std::string(text) +
                            "' (expected N^m)");
    }
    return v;
  };
  auto caret = text.find('^');
  if (caret == std::string_view::npos) return PrimePower(parse_int(text), 1);
  std::uint64_t m = parse_int(text.substr(caret + 1));
  if (m > 64) throw InvalidArgument("exponent too large in '" +
                                    std::string(text) + "'");
  return PrimePower(parse_int(text.substr(0, caret)), static_cast<int>(m));
}

std::string PrimePower::to_string() const {
  return std::to_string(prime_) + "^" + std::to_string(exponent_);
}

std::vector<BigInt> newton_power_sums(const WeilPolynomial& poly, int n_max) {
  if (n_max < 1) throw InvalidArgument("n_max must be >= 1");
  const int d = poly.poly().degree();
  std::vector<BigInt> c(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) c[i] = poly.c(i);

  // s[k] for k = 0..n_max; s[0] unused.
  std::vector<BigInt> s(static_cast<std::size_t>(n_max) + 1);
  for (int k = 1; k <= n_max; ++k) {
    BigInt acc = 0;
    const int top = std::min(k - 1, d);
    for (int i = 1; i <= top; ++i) acc += c[i] * s[k - i];
    if (k <= d) acc += k * c[k];
    s[k] = -acc;
  }
  s.erase(s.begin());
  return s;
}

std::vector<std::uint64_t> newton_power_sums_mod(const WeilPolynomial& poly,
                                                 int n_max,
                                                 std::uint64_t modulus) {
  if (n_max < 1) throw InvalidArgument("n_max must be >= 1");
  if (modulus < 2) throw InvalidArgument("modulus must be >= 2");
  const int d = poly.poly().degree();
  std::vector<std::uint64_t> c(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) c[i] = mod_reduce(poly.c(i), modulus);

  std::vector<std::uint64_t> s(static_cast<std::size_t>(n_max) + 1, 0);
  for (int k = 1; k <= n_max; ++k) {
    std::uint64_t acc = 0;
    const int top = std::min(k - 1, d);
    for (int i = 1; i <= top; ++i) {
      acc = add_mod(acc, mul_mod(c[i], s[k - i], modulus), modulus);
    }
    if (k <= d) {
      acc = add_mod(acc, mul_mod(static_cast<std::uint64_t>(k) % modulus, c[k],
                                 modulus),
                    modulus);
    }
    s[k] = sub_mod(0, acc, modulus);
  }
  s.erase(s.begin());
  return s;
}

WeilPolynomial charpoly_from_power_sums(std::span<const BigInt> power_sums,
                                        std::uint64_t q, int genus) {
  if (genus < 1) throw InvalidArgument("genus must be >= 1");
  if (power_sums.size() != static_cast<std::size_t>(genus)) {
    throw InvalidArgument("expected exactly " + std::to_string(genus) +
                          " power sums, got " +
                          std::to_string(power_sums.size()));
  }
  const int d = 2 * genus;
  std::vector<BigInt> c(static_cast<std::size_t>(d) + 1);
  c[0] = 1;
  for (int k = 1; k <= genus; ++k) {
    BigInt num = power_sums[k - 1];
    for (int i = 1; i < k; ++i) num += c[i] * power_sums[k - i - 1];
    if (!mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(k))) {
      throw NonIntegralError("Newton's identities give c_" +
                             std::to_string(k) + " = -(" + num.get_str() +
                             ")/" + std::to_string(k) +
                             ", not an integer; inconsistent point counts");
    }
    c[k] = -num / k;
  }
  for (int i = genus + 1; i <= d; ++i) {
    c[i] = big_pow(q, static_cast<std::uint64_t>(i - genus)) * c[d - i];
  }
  std::vector<BigInt> ascending(c.rbegin(), c.rend());
  return WeilPolynomial(q, IntPolynomial(std::move(ascending)));
}

std::optional<std::string> weil_validate(const WeilPolynomial& poly,
                                         int depth) {
  const IntPolynomial& p = poly.poly();
  if (!p.is_monic()) return "not monic";
  if (p.degree() < 2 || p.degree() % 2 != 0) {
    return "degree " + std::to_string(p.degree()) + " is not 2g with g >= 1";
  }
  const int g = poly.genus();
  const std::uint64_t q = poly.q();
  for (int i = 0; i <= g; ++i) {
    BigInt expected = big_pow(q, static_cast<std::uint64_t>(g - i)) * poly.c(i);
    BigInt actual = poly.c(2 * g - i);
    if (actual != expected) {
      std::ostringstream msg;
      msg << "functional equation fails: c_" << 2 * g - i << " = "
          << actual.get_str() << ", expected q^" << g - i << " * c_" << i
          << " = " << expected.get_str();
      return msg.str();
    }
  }
  if (depth <= 0) depth = 2 * g;
  auto s = newton_power_sums(poly, depth);
  const BigInt four_g2 = 4 * g * g;
  for (int n = 1; n <= depth; ++n) {
    // |s_n| <= 2g q^{n/2}  <=>  s_n^2 <= 4 g^2 q^n
    BigInt lhs = s[n - 1] * s[n - 1];
    if (lhs > four_g2 * big_pow(q, static_cast<std::uint64_t>(n))) {
      std::ostringstream msg;
      msg << "Weil bound fails at n = " << n << ": |s_" << n
          << "| = " << BigInt(abs(s[n - 1])).get_str() << " > 2g q^(n/2)";
      return msg.str();
    }
  }
  return std::nullopt;
}

WeilPolynomial weil_base_change(const WeilPolynomial& poly, int k) {
  if (k < 1) throw InvalidArgument("base change degree must be >= 1");
  if (k == 1) return poly;
  const int g = poly.genus();
  auto qk = checked_pow(poly.q(), static_cast<std::uint64_t>(k));
  if (!qk || *qk > (std::uint64_t{1} << 62)) {
    throw InvalidArgument("q^k too large for base change");
  }
  auto s = newton_power_sums(poly, 2 * g * k);
  std::vector<BigInt> lifted(static_cast<std::size_t>(2 * g));
  for (int j = 1; j <= 2 * g; ++j) lifted[j - 1] = s[j * k - 1];

  WeilPolynomial result = charpoly_from_power_sums(
      std::span<const BigInt>(lifted).first(static_cast<std::size_t>(g)), *qk,
      g);
  auto check = newton_power_sums(result, 2 * g);
  for (int j = g; j < 2 * g; ++j) {
    if (check[j] != lifted[j]) {
      throw ValidationError("base change: power sum s_" +
                            std::to_string(j + 1) +
                            " disagrees with the functional equation; input "
                            "is not a Weil polynomial");
    }
  }
  return result;
}

WeilPolynomial hecke_to_frobenius(const IntPolynomial& hecke_charpoly,
                                  std::uint64_t ell, int mult) {
  if (!hecke_charpoly.is_monic()) {
    throw InvalidArgument("Hecke polynomial must be monic: " +
                          hecke_charpoly.to_string());
  }
  if (hecke_charpoly.degree() < 1) {
    throw InvalidArgument("Hecke polynomial must have degree >= 1");
  }
  if (mult < 1) throw InvalidArgument("multiplicity must be >= 1");
  const int d = hecke_charpoly.degree();
  const BigInt ell_big(static_cast<unsigned long>(ell));
  // sum_i h_i (x^2 + ell)^i x^{d-i}
  const IntPolynomial shift({ell_big, BigInt(0), BigInt(1)});
  IntPolynomial shift_pow{1};
  IntPolynomial acc;
  for (int i = 0; i <= d; ++i) {
    std::vector<BigInt> term(static_cast<std::size_t>(d - i), BigInt(0));
    for (const BigInt& c : shift_pow.coefficients()) {
      term.push_back(c * hecke_charpoly.coeff(i));
    }
    acc = acc + IntPolynomial(std::move(term));
    if (i < d) shift_pow = shift_pow * shift;
  }
  return WeilPolynomial(ell, pow(acc, mult));
}

WeilPolynomial poly_product(std::span<const WeilPolynomial> factors) {
  if (factors.empty()) {
    throw InvalidArgument("product of an empty list of Weil polynomials");
  }
  const std::uint64_t q = factors.front().q();
  IntPolynomial acc{1};
  for (const auto& f : factors) {
    if (f.q() != q) {
      throw InvalidArgument("mixed base fields in product: q = " +
                            std::to_string(q) + " and q = " +
                            std::to_string(f.q()));
    }
    acc = acc * f.poly();
  }
  return WeilPolynomial(q, std::move(acc));
}

}  // namespace autexcl
