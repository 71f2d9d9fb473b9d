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

// Point counts |X(F_{q^n})| from a Weil polynomial, the count R(n) of points
// of exact degree n, and the criterion sequence P_{N^m}(n) = R(n) mod N^m.

#ifndef AUTEXCL_ZETA_H_
#define AUTEXCL_ZETA_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "autexcl/algebra.h"
#include "autexcl/arith.h"

namespace autexcl {

enum class Arithmetic { kModular, kExact };

// 1 + q^n - s_n.
BigInt point_count(const WeilPolynomial& poly, int n);

// 1 + q^n - s_n computed modulo `modulus` throughout.
std::uint64_t point_count_mod(const WeilPolynomial& poly, int n,
                              std::uint64_t modulus);

// Where a series came from. Negative R(n) is impossible for a genuine curve,
// so it is an error for curve data and only a warning otherwise.
enum class Provenance { kWeilPolynomial, kCurve };

// Sparse table n -> |X(F_{q^n})|, either exact or reduced mod a modulus.
class PointCountSeries {
 public:
  explicit PointCountSeries(std::uint64_t q,
                            std::optional<std::uint64_t> modulus = {},
                            Provenance provenance = Provenance::kWeilPolynomial);

  static PointCountSeries exact(const WeilPolynomial& poly, int n_max);
  static PointCountSeries modular(const WeilPolynomial& poly, int n_max,
                                  std::uint64_t modulus);

  // Stores the count for F_{q^n}, reduced when the series is modular.
  void set(int n, const BigInt& count);
  bool has(int n) const { return counts_.contains(n); }
  // Throws MissingCountError when absent.
  const BigInt& at(int n) const;

  std::uint64_t q() const { return q_; }
  const std::optional<std::uint64_t>& modulus() const { return modulus_; }
  bool is_modular() const { return modulus_.has_value(); }
  Provenance provenance() const { return provenance_; }
  // Largest n such that 1..n are all present (0 if none).
  int depth() const;

 private:
  std::uint64_t q_;
  std::optional<std::uint64_t> modulus_;
  Provenance provenance_;
  std::map<int, BigInt> counts_;
};

// R(n): points of exact degree n, by inclusion-exclusion over the maximal
// proper divisors n/p of n. Modular series give a residue in [0, M - 1].
// On exact series, n | R(n) is checked (ValidationError) and R(n) < 0 is an
// error for curve provenance.
BigInt new_points(const PointCountSeries& counts, int n);

struct NewPointSeries {
  std::uint64_t q = 0;
  std::optional<std::uint64_t> modulus;
  std::vector<BigInt> values;  // values[i] = R(i + 1)
  std::vector<std::string> warnings;
};

NewPointSeries new_point_series(const PointCountSeries& counts, int n_max);

struct PSequence {
  PrimePower prime_power;
  std::vector<std::uint64_t> values;  // values[i] = P(i + 1)

  int size() const { return static_cast<int>(values.size()); }
  std::uint64_t at(int n) const { return values.at(static_cast<std::size_t>(n - 1)); }
  // P(from) + ... + P(to), 1-based inclusive.
  std::uint64_t sum(int from, int to) const;
  std::vector<std::uint64_t> partial_sums() const;
};

// P(1..n_max). kModular never leaves Z/N^mZ; kExact computes R(n) exactly
// and reduces afterwards.
PSequence p_sequence(const WeilPolynomial& poly, const PrimePower& pp,
                     int n_max, Arithmetic arithmetic = Arithmetic::kModular);

}  // namespace autexcl

#endif  // AUTEXCL_ZETA_H_
