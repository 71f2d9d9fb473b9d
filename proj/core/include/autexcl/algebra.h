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

// Exact and modular polynomial arithmetic around the characteristic
// polynomial of Frobenius.
//
// Orientation: a Weil polynomial of genus g over F_q is written
//
//   Q(x) = x^{2g} + c_1 x^{2g-1} + ... + c_{2g},
//
// and satisfies c_{2g-i} = q^{g-i} c_i. Coefficient vectors are always
// stored and serialized in ascending degree (index i holds the coefficient
// of x^i), so c_i lives at index 2g - i.

#ifndef AUTEXCL_ALGEBRA_H_
#define AUTEXCL_ALGEBRA_H_

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "autexcl/arith.h"

namespace autexcl {

class IntPolynomial {
 public:
  IntPolynomial() = default;
  // Ascending coefficients; trailing zeros are dropped.
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  // Coefficient of x^i; zero outside the stored range.
  BigInt coeff(int i) const;
  std::span<const BigInt> coefficients() const { return coeffs_; }

  // "c0,c1,...,cd" in ascending degree; "0" for the zero polynomial.
  std::string to_string() const;

  friend IntPolynomial operator+(const IntPolynomial& a,
                                 const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a,
                                 const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a,
                                 const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPolynomial pow(const IntPolynomial& base, int exp);

// Monic polynomial of even degree 2g >= 2 with a base field size q.
// Construction checks only the shape; weil_validate checks the rest.
class WeilPolynomial {
 public:
  WeilPolynomial(std::uint64_t q, IntPolynomial poly);

  std::uint64_t q() const { return q_; }
  int genus() const { return poly_.degree() / 2; }
  const IntPolynomial& poly() const { return poly_; }

  // c_i in the descending convention above; c(0) == 1.
  BigInt c(int i) const { return poly_.coeff(poly_.degree() - i); }

  friend bool operator==(const WeilPolynomial& a, const WeilPolynomial& b) {
    return a.q_ == b.q_ && a.poly_ == b.poly_;
  }

 private:
  std::uint64_t q_;
  IntPolynomial poly_;
};

// Candidate automorphism order N^m.
class PrimePower {
 public:
  PrimePower(std::uint64_t prime, int exponent);

  // Accepts "N^m" or a bare prime "N".
  static PrimePower parse(std::string_view text);

  std::uint64_t prime() const { return prime_; }
  int exponent() const { return exponent_; }
  std::uint64_t modulus() const { return modulus_; }
  std::string to_string() const;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;

 private:
  std::uint64_t prime_;
  int exponent_;
  std::uint64_t modulus_;
};

// Power sums s_1..s_{n_max} of the roots of Q via Newton's identities.
// Element i of the result holds s_{i+1}.
std::vector<BigInt> newton_power_sums(const WeilPolynomial& poly, int n_max);

// Same recurrence run entirely modulo `modulus` (>= 2); values in
// [0, modulus - 1].
std::vector<std::uint64_t> newton_power_sums_mod(const WeilPolynomial& poly,
                                                 int n_max,
                                                 std::uint64_t modulus);

// Rebuilds the genus-g Weil polynomial over F_q from s_1..s_g: Newton's
// identities give c_1..c_g, the functional equation gives the rest.
// Throws NonIntegralError when some k does not divide the Newton numerator.
WeilPolynomial charpoly_from_power_sums(std::span<const BigInt> power_sums,
                                        std::uint64_t q, int genus);

// First violation of: monic of degree 2g, functional equation, and
// |s_n| <= 2g q^{n/2} for n <= depth. depth <= 0 selects 2g.
std::optional<std::string> weil_validate(const WeilPolynomial& poly,
                                         int depth = 0);

// Characteristic polynomial of Frobenius over F_{q^k} (roots alpha_i^k).
WeilPolynomial weil_base_change(const WeilPolynomial& poly, int k);

// Eichler-Shimura factor for a Hecke orbit: (x^d h((x^2 + ell)/x))^mult,
// i.e. the product over roots t of h of (x^2 - t x + ell)^mult.
WeilPolynomial hecke_to_frobenius(const IntPolynomial& hecke_charpoly,
                                  std::uint64_t ell, int mult);

// Exact product over a common q. Throws InvalidArgument on an empty input or
// mixed base fields.
WeilPolynomial poly_product(std::span<const WeilPolynomial> factors);

}  // namespace autexcl

#endif  // AUTEXCL_ALGEBRA_H_
