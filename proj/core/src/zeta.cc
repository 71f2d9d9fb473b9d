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

#include "autexcl/zeta.h"

#include <bit>
#include <numeric>

#include "autexcl/errors.h"

namespace autexcl {

BigInt point_count(const WeilPolynomial& poly, int n) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  auto s = newton_power_sums(poly, n);
  return 1 + big_pow(poly.q(), static_cast<std::uint64_t>(n)) - s.back();
}

std::uint64_t point_count_mod(const WeilPolynomial& poly, int n,
                              std::uint64_t modulus) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  auto s = newton_power_sums_mod(poly, n, modulus);
  std::uint64_t qn = pow_mod(poly.q(), static_cast<std::uint64_t>(n), modulus);
  return sub_mod(add_mod(1 % modulus, qn, modulus), s.back(), modulus);
}

PointCountSeries::PointCountSeries(std::uint64_t q,
                                   std::optional<std::uint64_t> modulus,
                                   Provenance provenance)
    : q_(q), modulus_(modulus), provenance_(provenance) {
  if (modulus_ && *modulus_ < 2) {
    throw InvalidArgument("modulus must be >= 2");
  }
}

PointCountSeries PointCountSeries::exact(const WeilPolynomial& poly,
                                         int n_max) {
  PointCountSeries series(poly.q());
  auto s = newton_power_sums(poly, n_max);
  BigInt qn = 1;
  for (int n = 1; n <= n_max; ++n) {
    qn *= static_cast<unsigned long>(poly.q());
    series.counts_.emplace(n, 1 + qn - s[n - 1]);
  }
  return series;
}

PointCountSeries PointCountSeries::modular(const WeilPolynomial& poly,
                                           int n_max, std::uint64_t modulus) {
  PointCountSeries series(poly.q(), modulus);
  auto s = newton_power_sums_mod(poly, n_max, modulus);
  const std::uint64_t q = poly.q() % modulus;
  std::uint64_t qn = 1;
  for (int n = 1; n <= n_max; ++n) {
    qn = mul_mod(qn, q, modulus);
    std::uint64_t v = sub_mod(add_mod(1, qn, modulus), s[n - 1], modulus);
    series.counts_.emplace(n, BigInt(static_cast<unsigned long>(v)));
  }
  return series;
}

void PointCountSeries::set(int n, const BigInt& count) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  if (modulus_) {
    counts_[n] = BigInt(static_cast<unsigned long>(mod_reduce(count, *modulus_)));
  } else {
    counts_[n] = count;
  }
}

const BigInt& PointCountSeries::at(int n) const {
  auto it = counts_.find(n);
  if (it == counts_.end()) {
    throw MissingCountError("point count over F_{q^" + std::to_string(n) +
                            "} is not available");
  }
  return it->second;
}

int PointCountSeries::depth() const {
  int n = 0;
  while (counts_.contains(n + 1)) ++n;
  return n;
}

BigInt new_points(const PointCountSeries& counts, int n) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  BigInt r = counts.at(n);
  if (n > 1) {
    // Maximal proper divisors d_i = n / p_i; the union of the X(F_{q^{d_i}})
    // is expanded over subsets, whose intersections are X(F_{q^gcd}).
    std::vector<int> divisors;
    for (auto p : prime_divisors(static_cast<std::uint64_t>(n))) {
      divisors.push_back(n / static_cast<int>(p));
    }
    const std::size_t k = divisors.size();
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      int g = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask & (1u << i)) g = std::gcd(g, divisors[i]);
      }
      if (std::popcount(mask) % 2 == 1) {
        r -= counts.at(g);
      } else {
        r += counts.at(g);
      }
    }
  }
  if (const auto& m = counts.modulus()) {
    return BigInt(static_cast<unsigned long>(mod_reduce(r, *m)));
  }
  if (!mpz_divisible_ui_p(r.get_mpz_t(), static_cast<unsigned long>(n))) {
    throw ValidationError("R(" + std::to_string(n) + ") = " + r.get_str() +
                          " is not divisible by " + std::to_string(n));
  }
  if (r < 0 && counts.provenance() == Provenance::kCurve) {
    throw ValidationError("R(" + std::to_string(n) + ") = " + r.get_str() +
                          " is negative for curve data");
  }
  return r;
}

NewPointSeries new_point_series(const PointCountSeries& counts, int n_max) {
  NewPointSeries out;
  out.q = counts.q();
  out.modulus = counts.modulus();
  out.values.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    out.values.push_back(new_points(counts, n));
    if (out.values.back() < 0) {
      out.warnings.push_back("R(" + std::to_string(n) + ") = " +
                             out.values.back().get_str() +
                             " is negative; no curve realizes this series");
    }
  }
  return out;
}

std::uint64_t PSequence::sum(int from, int to) const {
  std::uint64_t s = 0;
  for (int n = from; n <= to; ++n) s += at(n);
  return s;
}

std::vector<std::uint64_t> PSequence::partial_sums() const {
  std::vector<std::uint64_t> out(values.size());
  std::partial_sum(values.begin(), values.end(), out.begin());
  return out;
}

PSequence p_sequence(const WeilPolynomial& poly, const PrimePower& pp,
                     int n_max, Arithmetic arithmetic) {
  if (n_max < 1) throw InvalidArgument("n_max must be >= 1");
  const std::uint64_t m = pp.modulus();
  PointCountSeries series =
      arithmetic == Arithmetic::kModular
          ? PointCountSeries::modular(poly, n_max, m)
          : PointCountSeries::exact(poly, n_max);
  PSequence out{pp, {}};
  out.values.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    out.values.push_back(mod_reduce(new_points(series, n), m));
  }
  return out;
}

}  // namespace autexcl
