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

// Small finite fields F_{p^k} = F_p[x]/(m(x)) for exhaustive enumeration.
//
// An element is a packed coordinate vector: the integer sum a_i p^i stands
// for sum a_i beta^i, beta a root of the modulus. Packed integers are also
// the element syntax in curve files.

#ifndef AUTEXCL_ORACLE_FINITE_FIELD_H_
#define AUTEXCL_ORACLE_FINITE_FIELD_H_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace autexcl {

class FiniteField {
 public:
  using Element = std::uint32_t;

  static constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 26;
  // Log/antilog tables are built up to this size; larger fields multiply in
  // the polynomial basis.
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 22;

  // F_{p^k} with the canonical modulus.
  static std::shared_ptr<const FiniteField> create(
      std::uint32_t p, int k, std::uint64_t budget = kDefaultBudget);

  // Explicit monic modulus in ascending order (degree k = size - 1).
  // Throws InvalidArgument when it is not irreducible over F_p.
  static std::shared_ptr<const FiniteField> with_modulus(
      std::uint32_t p, std::vector<std::uint32_t> modulus,
      std::uint64_t budget = kDefaultBudget);

  std::uint32_t characteristic() const { return p_; }
  int degree() const { return k_; }
  std::uint64_t size() const { return size_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element sqr(Element a) const { return mul(a, a); }
  // Throws InvalidArgument for zero.
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const;

  // Image of an integer in the prime field.
  Element from_int(std::int64_t v) const;
  std::vector<std::uint32_t> coordinates(Element a) const;
  Element from_coordinates(std::span<const std::uint32_t> coords) const;

  bool is_square(Element a) const;
  // Unique square root in characteristic 2.
  Element sqrt_char2(Element a) const;
  // Tr_{F_{p^k}/F_p}(a) as an integer in [0, p - 1].
  std::uint32_t absolute_trace(Element a) const;
  Element primitive_element() const { return generator_; }

  bool contains(std::uint64_t packed) const { return packed < size_; }

 private:
  FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus);

  Element slow_mul(Element a, Element b) const;
  Element slow_pow(Element a, std::uint64_t e) const;
  void build_tables();

  std::uint32_t p_;
  int k_;
  std::uint64_t size_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> place_;  // p^i
  Element generator_ = 0;
  std::vector<std::uint32_t> log_;
  std::vector<Element> exp_;  // length 2 (size - 1)
  std::vector<std::uint32_t> basis_trace_;
};

// Lexicographically smallest monic irreducible of degree k, comparing the
// tuples (c_0, c_1, ..., c_{k-1}) with c_0 most significant.
std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, int k);

// Trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

// F_{p^k} inside F_{p^{kn}}: the base generator maps to the first root (in
// packed order) of the base modulus in the extension.
class FieldEmbedding {
 public:
  using Element = FiniteField::Element;

  FieldEmbedding(std::shared_ptr<const FiniteField> base,
                 std::shared_ptr<const FiniteField> extension);

  Element operator()(Element a) const;
  const FiniteField& base() const { return *base_; }
  const FiniteField& extension() const { return *extension_; }
  const std::shared_ptr<const FiniteField>& extension_ptr() const {
    return extension_;
  }
  Element root() const { return root_; }

 private:
  std::shared_ptr<const FiniteField> base_;
  std::shared_ptr<const FiniteField> extension_;
  Element root_ = 0;
  std::vector<Element> powers_;  // root^i, i < base degree
};

// F_{q^n} for q = |base|, with the embedding of the base field.
// Throws BudgetExceeded when q^n exceeds the budget.
FieldEmbedding ff_tower(const std::shared_ptr<const FiniteField>& base, int n,
                        std::uint64_t budget = FiniteField::kDefaultBudget);

}  // namespace autexcl

#endif  // AUTEXCL_ORACLE_FINITE_FIELD_H_
