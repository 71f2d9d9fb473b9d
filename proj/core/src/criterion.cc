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

#include "autexcl/criterion.h"

#include "autexcl/errors.h"

namespace autexcl {
namespace {

void require_genus(int genus) {
  if (genus < 2) {
    throw InvalidArgument("criterion needs genus >= 2, got " +
                          std::to_string(genus));
  }
}

}  // namespace

std::uint64_t bound(std::uint64_t prime, int exponent, int genus) {
  require_genus(genus);
  PrimePower pp(prime, exponent);
  // 2 (N^m - 1)/(N - 1) = 2 (1 + N + ... + N^{m-1})
  std::uint64_t geometric = 0;
  std::uint64_t term = 1;
  for (int i = 0; i < exponent; ++i) {
    geometric += term;
    term *= prime;
  }
  return static_cast<std::uint64_t>(2 * genus) / (prime - 1) + 2 * geometric;
}

ExclusionReport exclude(const WeilPolynomial& poly, const PrimePower& pp,
                        const ExcludeOptions& options) {
  const int g = poly.genus();
  require_genus(g);
  if (options.n_max < 1) throw InvalidArgument("n_max must be >= 1");
  const std::uint64_t b =
      options.override_bound.value_or(bound(pp, g));

  PSequence seq = p_sequence(poly, pp, options.n_max, options.arithmetic);
  ExclusionReport report{pp, g, b, 0, {}, Inconclusive{0}};
  std::uint64_t sum = 0;
  for (int n = 1; n <= options.n_max; ++n) {
    sum += seq.at(n);
    report.partial_sums.push_back(sum);
    report.n_scanned = n;
    if (sum > b) {
      report.verdict = Excluded{n, sum};
      return report;
    }
  }
  report.verdict = Inconclusive{sum};
  return report;
}

std::vector<LargePrimeWitness> large_prime_exclusion(const WeilPolynomial& poly,
                                                     int n_max) {
  const int g = poly.genus();
  require_genus(g);
  std::vector<LargePrimeWitness> out;
  if (n_max < 2) return out;
  auto series = PointCountSeries::exact(poly, n_max);
  for (int n0 = 1; n0 < n_max; ++n0) {
    BigInt r = new_points(series, n0 + 1);
    if (r > 2 && r < 2 * g + 2) out.push_back({n0, r});
  }
  return out;
}

std::uint64_t ramification_lower_bound(const WeilPolynomial& poly,
                                       const PrimePower& pp, int n_max) {
  require_genus(poly.genus());
  return p_sequence(poly, pp, n_max).sum(1, n_max);
}

}  // namespace autexcl
