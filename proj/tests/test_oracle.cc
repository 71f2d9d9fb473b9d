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

#include <gtest/gtest.h>

#include <random>

#include "autexcl/algebra.h"
#include "autexcl/errors.h"
#include "autexcl/oracle/curve.h"
#include "autexcl/oracle/curve_io.h"
#include "autexcl/oracle/curve_map.h"
#include "autexcl/oracle/enumerate.h"
#include "autexcl/oracle/field_poly.h"
#include "autexcl/oracle/finite_field.h"
#include "support/corpus.h"
#include "support/naive.h"

namespace autexcl {
namespace {

using Element = FiniteField::Element;

std::shared_ptr<const FiniteField> prime_field(std::uint32_t p) {
  return FiniteField::create(p, 1);
}

TEST(FiniteField, CanonicalModulus) {
  EXPECT_EQ(canonical_modulus(2, 3), (std::vector<std::uint32_t>{1, 0, 1, 1}));
  EXPECT_EQ(canonical_modulus(2, 2), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(canonical_modulus(3, 2), (std::vector<std::uint32_t>{1, 0, 1}));
  std::vector<std::uint32_t> reducible{1, 0, 1};  // x^2 + 1 = (x + 1)^2 over F_2
  EXPECT_FALSE(is_irreducible(2, reducible));
  EXPECT_THROW(FiniteField::with_modulus(2, reducible), InvalidArgument);
}

class FieldAxioms : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(FieldAxioms, Exhaustive) {
  auto [p, k] = GetParam();
  auto f = FiniteField::create(p, k);
  const Element q = static_cast<Element>(f->size());
  for (Element a = 0; a < q; ++a) {
    EXPECT_EQ(f->add(a, f->neg(a)), 0u);
    EXPECT_EQ(f->pow(a, q), a);
    if (a != 0) {
      EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
    }
    for (Element b = 0; b < q; b += 3) {
      EXPECT_EQ(f->mul(a, b), f->mul(b, a));
      const Element c = (a * 7 + b) % q;
      EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
      EXPECT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
    }
  }
  // The multiplicative group is cyclic of order q - 1.
  const Element g = f->primitive_element();
  Element x = 1;
  for (Element i = 1; i < q - 1; ++i) {
    x = f->mul(x, g);
    ASSERT_NE(x, 1u);
  }
  EXPECT_EQ(f->mul(x, g), 1u);
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms,
                         ::testing::Values(std::pair{2, 1}, std::pair{2, 3},
                                           std::pair{2, 4}, std::pair{3, 2},
                                           std::pair{5, 2}, std::pair{7, 1}));

TEST(FiniteField, TraceAndSquares) {
  auto f = FiniteField::create(2, 4);
  int zero_trace = 0;
  for (Element a = 0; a < 16; ++a) {
    // Tr(a) = a + a^2 + a^4 + a^8 lands in F_2.
    Element t = 0, x = a;
    for (int i = 0; i < 4; ++i) {
      t = f->add(t, x);
      x = f->mul(x, x);
    }
    EXPECT_EQ(t, f->absolute_trace(a));
    zero_trace += t == 0;
    EXPECT_EQ(f->mul(f->sqrt_char2(a), f->sqrt_char2(a)), a);
  }
  EXPECT_EQ(zero_trace, 8);
  auto f9 = FiniteField::create(3, 2);
  int squares = 0;
  for (Element a = 1; a < 9; ++a) squares += f9->is_square(a);
  EXPECT_EQ(squares, 4);
}

TEST(FieldTower, Embeddings) {
  auto f2 = prime_field(2);
  auto e8 = ff_tower(f2, 3);
  EXPECT_EQ(e8.extension().size(), 8u);
  EXPECT_EQ(e8(0), 0u);
  EXPECT_EQ(e8(1), 1u);

  auto f8 = FiniteField::create(2, 3);
  auto e64 = ff_tower(f8, 2);
  const FiniteField& big = e64.extension();
  EXPECT_EQ(big.size(), 64u);
  // The image of the generator is a root of the base modulus ...
  Element acc = 0;
  const auto& m = f8->modulus();
  for (std::size_t i = m.size(); i-- > 0;) {
    acc = big.add(big.mul(acc, e64.root()), static_cast<Element>(m[i]));
  }
  EXPECT_EQ(acc, 0u);
  // ... and the embedding is a ring homomorphism.
  for (Element a = 0; a < 8; ++a) {
    for (Element b = 0; b < 8; ++b) {
      EXPECT_EQ(e64(f8->mul(a, b)), big.mul(e64(a), e64(b)));
      EXPECT_EQ(e64(f8->add(a, b)), big.add(e64(a), e64(b)));
    }
  }
  auto same = ff_tower(prime_field(5), 1);
  for (Element a = 0; a < 5; ++a) EXPECT_EQ(same(a), a);
  EXPECT_THROW(ff_tower(f2, 40, 1u << 20), BudgetExceeded);
}

TEST(FieldPoly, RootCounting) {
  auto f = prime_field(5);
  EXPECT_EQ(fp_count_distinct_roots(*f, {4, 0, 1}), 2u);        // x^2 - 1
  EXPECT_EQ(fp_count_distinct_roots(*f, {2, 0, 1}), 0u);        // x^2 + 2
  EXPECT_EQ(fp_count_distinct_roots(*f, {0, 4, 0, 0, 0, 1}), 5u);  // x^5 - x
  EXPECT_EQ(fp_count_distinct_roots(*f, {}), 5u);
  EXPECT_EQ(fp_gcd(*f, {4, 0, 1}, {1, 1}), (FieldPoly{1, 1}));
}

TEST(CountPoints, HyperellipticMatchesNaive) {
  auto c = CurveModel::hyperelliptic(prime_field(3), {1, 0, 0, 0, 0, 1});
  EXPECT_EQ(c.genus(), 2);
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(count_points(c, n),
              testing::naive_hyperelliptic_count(3, n, {1, 0, 0, 0, 0, 1}, {}))
        << "n=" << n;
  }
  auto c2 = CurveModel::hyperelliptic(prime_field(2), {0, 1, 0, 0, 0, 1}, {1});
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(count_points(c2, n),
              testing::naive_hyperelliptic_count(2, n, {0, 1, 0, 0, 0, 1}, {1}));
  }
  // Genus 3, y^2 + x y = x^7 + x^3 + 1.
  auto c3 = CurveModel::hyperelliptic(prime_field(2), {1, 0, 0, 1, 0, 0, 0, 1},
                                      {0, 1});
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(count_points(c3, n), testing::naive_hyperelliptic_count(
                                       2, n, {1, 0, 0, 1, 0, 0, 0, 1}, {0, 1}));
  }
}

TEST(CountPoints, RandomCurvesMatchNaive) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 6; ++trial) {
    const std::uint32_t p = trial % 2 ? 5 : 3;
    auto c = testing::random_hyperelliptic(rng, p, 2);
    std::vector<long> f(c.hyperelliptic().f.begin(), c.hyperelliptic().f.end());
    for (int n = 1; n <= 3; ++n) {
      EXPECT_EQ(count_points(c, n),
                testing::naive_hyperelliptic_count(p, n, f, {}));
    }
  }
}

TEST(CountPoints, Quartics) {
  // x^4 + y^4 + z^4 = (x + y + z)^4 over F_2 is singular; the points of
  // x + y + z = 0 are still 3. Count through the naive oracle only.
  EXPECT_EQ(testing::naive_quartic_count(2, 1, {{4, 0, 0, 1}, {0, 4, 0, 1},
                                                 {0, 0, 4, 1}}),
            3);
  auto f8 = FiniteField::create(2, 3);
  std::vector<QuarticTerm> klein{{3, 1, 0, 1}, {0, 3, 1, 1}, {1, 0, 3, 1}};
  auto k2 = CurveModel::plane_quartic(prime_field(2), klein);
  EXPECT_EQ(k2.genus(), 3);
  EXPECT_FALSE(k2.warnings().empty());
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(count_points(k2, n),
              testing::naive_quartic_count(2, n, {{3, 1, 0, 1}, {0, 3, 1, 1},
                                                  {1, 0, 3, 1}}));
  }
  auto fermat5 = CurveModel::plane_quartic(
      prime_field(5), {{4, 0, 0, 1}, {0, 4, 0, 1}, {0, 0, 4, 1}});
  for (int n = 1; n <= 2; ++n) {
    EXPECT_EQ(count_points(fermat5, n),
              testing::naive_quartic_count(5, n, {{4, 0, 0, 1}, {0, 4, 0, 1},
                                                  {0, 0, 4, 1}}));
  }
}

TEST(CurveModel, RejectsBadModels) {
  auto f3 = prime_field(3);
  // x^5 + x^4 + 1 = (x - 1)^2 (x^3 + 2x + 1) is not squarefree.
  EXPECT_THROW(CurveModel::hyperelliptic(f3, {1, 0, 0, 0, 1, 1}), SingularModel);
  EXPECT_THROW(CurveModel::hyperelliptic(f3, {1, 0, 0, 0, 1}), InvalidArgument);
  EXPECT_THROW(CurveModel::hyperelliptic(f3, {1, 0, 0, 1}), InvalidArgument);
  EXPECT_THROW(CurveModel::hyperelliptic(f3, {1, 0, 0, 0, 0, 1}, {1}),
               InvalidArgument);
  auto f2 = prime_field(2);
  EXPECT_THROW(CurveModel::hyperelliptic(f2, {0, 1, 0, 0, 0, 1}), SingularModel);
  // y^2 + x y = x^5 is singular at the origin.
  EXPECT_THROW(CurveModel::hyperelliptic(f2, {0, 0, 0, 0, 0, 1}, {0, 1}),
               SingularModel);
  EXPECT_THROW(CurveModel::hyperelliptic(f2, {1, 0, 0, 0, 0, 1}, {0, 0, 0, 1}),
               InvalidArgument);
  EXPECT_THROW(CurveModel::plane_quartic(
                   f2, {{4, 0, 0, 1}, {0, 4, 0, 1}, {0, 0, 4, 1}}),
               SingularModel);
  // x y z (x + y + z): reducible, singular at every pairwise intersection.
  EXPECT_THROW(CurveModel::plane_quartic(f2, {{2, 1, 1, 1}, {1, 2, 1, 1},
                                              {1, 1, 2, 1}}),
               SingularModel);
  EXPECT_THROW(CurveModel::plane_quartic(f2, {{3, 0, 0, 1}}), InvalidArgument);
  EXPECT_THROW(CurveModel::plane_quartic(f2, {{4, 0, 0, 1}, {4, 0, 0, 1}}),
               InvalidArgument);
}

TEST(CurveModel, ConicPairIsSingular) {
  // Q (Q + z^2) with Q = x^2 + xy + y^2: the two conics meet at (w : 1 : 0)
  // for w in F_4 \ F_2, and Q alone is a line pair through (0 : 0 : 1).
  auto f2 = prime_field(2);
  std::vector<QuarticTerm> terms{{4, 0, 0, 1}, {2, 2, 0, 1}, {0, 4, 0, 1},
                                 {2, 0, 2, 1}, {1, 1, 2, 1}, {0, 2, 2, 1}};
  EXPECT_THROW(CurveModel::plane_quartic(f2, terms), SingularModel);
}

TEST(VerifyMap, Orders) {
  auto c = CurveModel::hyperelliptic(prime_field(3), {1, 0, 0, 0, 0, 1});
  EXPECT_EQ(verify_map(c, hyperelliptic_involution(c)), 2);
  EXPECT_EQ(verify_map(c, HyperellipticMap{}), 1);

  auto c2 = CurveModel::hyperelliptic(prime_field(2), {0, 1, 0, 0, 0, 1}, {1});
  EXPECT_EQ(verify_map(c2, hyperelliptic_involution(c2)), 2);

  // y^2 = x^5 + 1 over F_11: x -> 3x with 3^5 = 1, and its product with -1.
  auto f11 = CurveModel::hyperelliptic(prime_field(11), {1, 0, 0, 0, 0, 1});
  HyperellipticMap rot;
  rot.a = 3;
  EXPECT_EQ(verify_map(f11, rot), 5);
  rot.e = 10;
  EXPECT_EQ(verify_map(f11, rot), 10);

  // y^2 = x^5 - x over F_5: x -> 1/x, y -> 2y/x^3 has order 4.
  auto f5 = CurveModel::hyperelliptic(prime_field(5), {0, 4, 0, 0, 0, 1});
  HyperellipticMap swap;
  swap.a = 0;
  swap.b = 1;
  swap.c = 1;
  swap.d = 0;
  swap.e = 2;
  EXPECT_EQ(verify_map(f5, swap), 4);

  HyperellipticMap scale;
  scale.a = 2;
  EXPECT_THROW(verify_map(c, scale), ValidationError);
}

TEST(VerifyMap, KleinQuarticOrderSeven) {
  auto f8 = FiniteField::create(2, 3);
  auto klein = CurveModel::plane_quartic(
      f8, {{3, 1, 0, 1}, {0, 3, 1, 1}, {1, 0, 3, 1}});
  // b = 2 generates F_8^*; b^2 = 4 and b^4 = b^2 + b + 1 = 7.
  EXPECT_EQ(f8->mul(2, 2), 4u);
  EXPECT_EQ(f8->mul(4, 4), 7u);
  EXPECT_EQ(verify_map(klein, ProjectiveMap{{2, 0, 0, 0, 7, 0, 0, 0, 4}}), 7);
  EXPECT_EQ(verify_map(klein, ProjectiveMap{{1, 0, 0, 0, 1, 0, 0, 0, 1}}), 1);
  // The cyclic shift x -> y -> z -> x has order 3.
  EXPECT_EQ(verify_map(klein, ProjectiveMap{{0, 1, 0, 0, 0, 1, 1, 0, 0}}), 3);
  EXPECT_THROW(verify_map(klein, ProjectiveMap{{2, 0, 0, 0, 1, 0, 0, 0, 1}}),
               ValidationError);
  EXPECT_THROW(verify_map(klein, ProjectiveMap{{1, 0, 0, 1, 0, 0, 0, 0, 1}}),
               ValidationError);
}

TEST(CharpolyFromCurve, KnownAndCorpus) {
  auto c = CurveModel::hyperelliptic(prime_field(3), {1, 0, 0, 0, 0, 1});
  EXPECT_EQ(charpoly_from_curve(c).poly(), (IntPolynomial{9, 0, 0, 0, 1}));
  auto klein = CurveModel::plane_quartic(
      FiniteField::create(2, 3), {{3, 1, 0, 1}, {0, 3, 1, 1}, {1, 0, 3, 1}});
  EnumerateOptions small;
  small.budget = 1u << 12;  // validates n = 4 only
  EXPECT_EQ(charpoly_from_curve(klein, small).poly(),
            pow(IntPolynomial{8, 5, 1}, 3));

  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    auto curve = testing::random_hyperelliptic(rng, 5, 2);
    auto poly = charpoly_from_curve(curve);
    EXPECT_FALSE(weil_validate(poly).has_value());
    for (int n = 3; n <= 4; ++n) {
      EXPECT_EQ(point_count(poly, n), BigInt(count_points(curve, n)));
    }
  }
}

TEST(CurvePointSeries, CurveInvariants) {
  auto c = CurveModel::hyperelliptic(prime_field(3), {1, 0, 0, 0, 0, 1});
  auto s = curve_point_series(c, 6);
  EXPECT_EQ(s.provenance(), Provenance::kCurve);
  for (int n = 1; n <= 6; ++n) {
    BigInt r = new_points(s, n);
    EXPECT_GE(r, 0);
    EXPECT_TRUE(mpz_divisible_ui_p(r.get_mpz_t(), n));
  }
}

TEST(CurveIo, ParsesAndRejects) {
  auto cf = parse_curve_file(
      "# comment\n"
      "curve hyperelliptic id=t p=5 k=1 f=1,0,0,0,-1,1\n"
      "map involution order=2\n");
  EXPECT_EQ(cf.id, "t");
  EXPECT_EQ(cf.curve.hyperelliptic().f, (FieldPoly{1, 0, 0, 0, 4, 1}));
  ASSERT_EQ(cf.maps.size(), 1u);
  EXPECT_EQ(cf.maps[0].order, 2);
  EXPECT_EQ(cf.maps[0].line, 3);

  auto quartic = parse_curve_file(
      "curve quartic p=2 k=3 F=3,1,0:1;0,3,1:1;1,0,3:1\n"
      "map matrix m=2,0,0,0,7,0,0,0,4\n");
  EXPECT_FALSE(quartic.curve.is_hyperelliptic());

  try {
    parse_curve_file("curve hyperelliptic p=2 k=3 f=1,0,0,0,0,-1 h=1\n");
    FAIL() << "negative element over F_8 accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
  }
  try {
    parse_curve_file("\ncurve hyperelliptic p=3 k=1 f=1,0,0,0,0,1\nmap bogus\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(parse_curve_file("curve quartic p=2 k=1 F=4,0,0:9\n"), ParseError);
  EXPECT_THROW(parse_curve_file("curve hyperelliptic p=4 k=1 f=1,0,0,0,0,1\n"),
               ParseError);
  EXPECT_THROW(parse_curve_file("map involution\n"), ParseError);
  EXPECT_THROW(load_curve_file("/nonexistent/curve"), FileNotFound);
}

TEST(CurveIo, ShippedCurvesLoad) {
  const std::string dir = std::string(AUTEXCL_TEST_FIXTURES_DIR) + "/curves/";
  for (const char* name : {"hyper_g2_f2.curve", "hyper_g2_f3.curve",
                           "hyper_g2_f5.curve"}) {
    auto cf = load_curve_file(dir + name);
    ASSERT_EQ(cf.maps.size(), 1u);
    EXPECT_EQ(verify_map(cf.curve, cf.maps[0].map), *cf.maps[0].order);
  }
}

}  // namespace
}  // namespace autexcl
