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

// Exclusion of automorphisms of order N^m from point-count data.
//
// If u is an F_q-automorphism of order N^m, every partial sum of the
// P_{N^m} sequence counts at most the ramification points of X -> X/<u>,
// and Riemann-Hurwitz caps those by
//
//   B(N, m, g) = floor(2g / (N - 1)) + 2 (N^m - 1) / (N - 1).
//
// A partial sum strictly above B therefore rules such a u out. The converse
// does not hold: an Inconclusive verdict says nothing about existence.

#ifndef AUTEXCL_CRITERION_H_
#define AUTEXCL_CRITERION_H_

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "autexcl/algebra.h"
#include "autexcl/zeta.h"

namespace autexcl {

inline constexpr int kDefaultScanDepth = 300;

// B(N, m, g). Throws InvalidArgument for g < 2.
std::uint64_t bound(std::uint64_t prime, int exponent, int genus);
inline std::uint64_t bound(const PrimePower& pp, int genus) {
  return bound(pp.prime(), pp.exponent(), genus);
}

struct Excluded {
  int crossing_index;          // minimal n with S(n) > B
  std::uint64_t sum_at_crossing;
};

struct Inconclusive {
  std::uint64_t final_sum;
};

struct ExclusionReport {
  PrimePower prime_power;
  int genus;
  std::uint64_t bound;
  int n_scanned;
  std::vector<std::uint64_t> partial_sums;  // partial_sums[i] = S(i + 1)
  std::variant<Excluded, Inconclusive> verdict;

  bool excluded() const { return std::holds_alternative<Excluded>(verdict); }
};

struct ExcludeOptions {
  int n_max = kDefaultScanDepth;
  // Replaces B when a sharper cap on the ramification points is known.
  std::optional<std::uint64_t> override_bound;
  Arithmetic arithmetic = Arithmetic::kModular;
};

// Scans P(1..n_max), stopping at the first n with S(n) > B.
ExclusionReport exclude(const WeilPolynomial& poly, const PrimePower& pp,
                        const ExcludeOptions& options = {});

struct LargePrimeWitness {
  int n0;
  BigInt new_points;  // R(n0 + 1)
};

// Every n0 in [1, n_max) with 2 < R(n0 + 1) < 2g + 2. Any witness rules out
// automorphisms of every prime order N > 2g + 1. Exact arithmetic.
std::vector<LargePrimeWitness> large_prime_exclusion(const WeilPolynomial& poly,
                                                     int n_max);

// S(n_max). If an automorphism u of order N^m exists, this is a lower bound
// for the number of ramified points of X -> X/<u>.
std::uint64_t ramification_lower_bound(const WeilPolynomial& poly,
                                       const PrimePower& pp, int n_max);

}  // namespace autexcl

#endif  // AUTEXCL_CRITERION_H_
