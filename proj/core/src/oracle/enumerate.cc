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

#include "autexcl/oracle/enumerate.h"

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

#include "autexcl/arith.h"
#include "autexcl/errors.h"

namespace autexcl {
namespace {

using Element = FiniteField::Element;

constexpr std::uint64_t kParallelThreshold = std::uint64_t{1} << 14;

// Sums body(x) over x in [0, size), split across threads.
std::uint64_t parallel_sum(std::uint64_t size, unsigned threads,
                           const std::function<std::uint64_t(Element)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (size < kParallelThreshold || threads == 1) {
    std::uint64_t total = 0;
    for (std::uint64_t x = 0; x < size; ++x) total += body(static_cast<Element>(x));
    return total;
  }
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, size));
  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      const std::uint64_t lo = size * t / threads;
      const std::uint64_t hi = size * (t + 1) / threads;
      std::uint64_t acc = 0;
      for (std::uint64_t x = lo; x < hi; ++x) acc += body(static_cast<Element>(x));
      partial[t] = acc;
    });
  }
  for (auto& th : pool) th.join();
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  return total;
}

std::uint64_t count_hyperelliptic(const CurveModel& curve,
                                  const FieldEmbedding& embed,
                                  unsigned threads) {
  const FiniteField& e = embed.extension();
  const FieldPoly f = fp_map(embed, curve.hyperelliptic().f);
  const FieldPoly h = fp_map(embed, curve.hyperelliptic().h);
  std::uint64_t affine;
  if (e.characteristic() != 2) {
    affine = parallel_sum(e.size(), threads, [&](Element x) -> std::uint64_t {
      const Element v = fp_eval(e, f, x);
      if (v == 0) return 1;
      return e.is_square(v) ? 2 : 0;
    });
  } else {
    // y = h z turns y^2 + h y = f into z^2 + z = f / h^2, solvable iff the
    // absolute trace vanishes.
    affine = parallel_sum(e.size(), threads, [&](Element x) -> std::uint64_t {
      const Element hx = fp_eval(e, h, x);
      if (hx == 0) return 1;
      const Element rhs = e.div(fp_eval(e, f, x), e.mul(hx, hx));
      return e.absolute_trace(rhs) == 0 ? 2 : 0;
    });
  }
  return affine + 1;
}

std::uint64_t count_quartic(const CurveModel& curve,
                            const FieldEmbedding& embed, unsigned threads) {
  const FiniteField& e = embed.extension();
  std::vector<QuarticTerm> terms = curve.quartic().terms;
  for (auto& t : terms) t.coeff = embed(t.coeff);
  std::uint64_t total =
      parallel_sum(e.size(), threads, [&](Element x) -> std::uint64_t {
        return fp_count_distinct_roots(e, quartic_restrict(e, terms, 1, x, 1));
      });
  total += fp_count_distinct_roots(e, quartic_restrict(e, terms, 0, 1, 0));
  if (fp_eval(e, quartic_restrict(e, terms, 0, 0, 0), 1) == 0) ++total;
  return total;
}

}  // namespace

std::uint64_t count_points(const CurveModel& curve, int n,
                           const EnumerateOptions& options) {
  if (n < 1) throw InvalidArgument("count_points needs n >= 1");
  FieldEmbedding embed = ff_tower(curve.field_ptr(), n, options.budget);
  return curve.is_hyperelliptic()
             ? count_hyperelliptic(curve, embed, options.threads)
             : count_quartic(curve, embed, options.threads);
}

WeilPolynomial charpoly_from_curve(const CurveModel& curve,
                                   const EnumerateOptions& options) {
  const int g = curve.genus();
  const std::uint64_t q = curve.q();
  std::vector<BigInt> sums;
  for (int n = 1; n <= g; ++n) {
    sums.push_back(1 + big_pow(q, n) - BigInt(count_points(curve, n, options)));
  }
  std::optional<WeilPolynomial> poly;
  try {
    poly = charpoly_from_power_sums(sums, q, g);
  } catch (const NonIntegralError& err) {
    throw ValidationError(std::string("counts do not come from a curve: ") +
                          err.what());
  }
  if (auto violation = weil_validate(*poly)) {
    throw ValidationError("reconstructed polynomial fails validation: " +
                          *violation);
  }
  for (int n = g + 1; n <= 2 * g; ++n) {
    auto size = checked_pow(q, static_cast<std::uint64_t>(n));
    if (!size || *size > options.budget) break;
    const BigInt predicted = point_count(*poly, n);
    const std::uint64_t counted = count_points(curve, n, options);
    if (predicted != BigInt(counted)) {
      throw ValidationError("predicted |X(F_{q^" + std::to_string(n) +
                            "})| = " + to_string(predicted) +
                            " but enumeration gives " +
                            std::to_string(counted));
    }
  }
  return *poly;
}

PointCountSeries curve_point_series(const CurveModel& curve, int n_max,
                                    const EnumerateOptions& options) {
  PointCountSeries series(curve.q(), std::nullopt, Provenance::kCurve);
  for (int n = 1; n <= n_max; ++n) {
    series.set(n, BigInt(count_points(curve, n, options)));
  }
  return series;
}

}  // namespace autexcl
