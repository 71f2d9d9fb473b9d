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

// Seeded random corpora shared by unit and acceptance tests.

#ifndef AUTEXCL_TESTS_SUPPORT_CORPUS_H_
#define AUTEXCL_TESTS_SUPPORT_CORPUS_H_

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "autexcl/algebra.h"
#include "autexcl/errors.h"
#include "autexcl/oracle/curve.h"

namespace autexcl::testing {

// Product of random elliptic-type factors x^2 - a x + q, |a| <= 2 sqrt(q).
// Every such product is a Weil polynomial.
inline WeilPolynomial random_weil(std::mt19937_64& rng, std::uint64_t q,
                                  int genus) {
  const long amax = static_cast<long>(std::floor(2 * std::sqrt(double(q))));
  std::uniform_int_distribution<long> dist(-amax, amax);
  std::vector<WeilPolynomial> factors;
  for (int i = 0; i < genus; ++i) {
    factors.emplace_back(q, IntPolynomial{static_cast<long>(q), -dist(rng), 1});
  }
  return poly_product(factors);
}

// Random smooth odd-degree hyperelliptic model of the given genus over F_p.
// Characteristic 2 draws a nonzero h of degree <= g.
inline CurveModel random_hyperelliptic(std::mt19937_64& rng, std::uint32_t p,
                                       int genus) {
  auto field = FiniteField::create(p, 1);
  std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
  std::uniform_int_distribution<std::uint32_t> nonzero(1, p - 1);
  while (true) {
    FieldPoly f(static_cast<std::size_t>(2 * genus + 2));
    for (auto& c : f) c = coeff(rng);
    f.back() = nonzero(rng);
    FieldPoly h;
    if (p == 2) {
      h.resize(static_cast<std::size_t>(genus + 1));
      for (auto& c : h) c = coeff(rng);
    }
    try {
      return CurveModel::hyperelliptic(field, f, h);
    } catch (const SingularModel&) {
    } catch (const InvalidArgument&) {
    }
  }
}

struct CurveCorpus {
  std::vector<CurveModel> curves;
  int odd_count = 0;   // over F_3 and F_5
  int char2_count = 0;
};

// 30 curves over each of F_3 and F_5 and 24 over F_2, genus 2 and 3.
inline CurveCorpus soundness_corpus(std::uint64_t seed = 20260417) {
  std::mt19937_64 rng(seed);
  CurveCorpus corpus;
  for (std::uint32_t p : {3u, 5u}) {
    for (int i = 0; i < 30; ++i) {
      corpus.curves.push_back(random_hyperelliptic(rng, p, 2 + i % 2));
      ++corpus.odd_count;
    }
  }
  for (int i = 0; i < 24; ++i) {
    corpus.curves.push_back(random_hyperelliptic(rng, 2, 2 + i % 2));
    ++corpus.char2_count;
  }
  return corpus;
}

}  // namespace autexcl::testing

#endif  // AUTEXCL_TESTS_SUPPORT_CORPUS_H_
