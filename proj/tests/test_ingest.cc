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

#include <algorithm>
#include <filesystem>

#include "autexcl/errors.h"
#include "autexcl/ingest.h"

namespace autexcl {
namespace {

const std::string kFixtures = std::string(AUTEXCL_TEST_FIXTURES_DIR) + "/hecke/";

const char* kSmall =
    "# toy dataset\n"
    "curve_id=toy\n"
    "expected_genus=3\n"
    "ell=3\n"
    "record label=a level=11 al=+1 h=-1,1 mult=1\n"
    "record label=b level=11 al=-1 h=1,1 mult=2\n";

TEST(ParseDataset, Valid) {
  auto ds = parse_dataset(kSmall);
  EXPECT_EQ(ds.curve_id, "toy");
  EXPECT_EQ(ds.expected_genus, 3);
  EXPECT_EQ(ds.ell, 3u);
  EXPECT_EQ(ds.base_change_k, 1);
  ASSERT_EQ(ds.records.size(), 2u);
  EXPECT_EQ(ds.records[1].al_sign, -1);
  EXPECT_EQ(ds.records[1].mult, 2);
  EXPECT_EQ(ds.records[1].line, 6);
  auto poly = assemble(ds);
  EXPECT_EQ(poly.q(), 3u);
  // (x^2 - x + 3)(x^2 + x + 3)^2
  EXPECT_EQ(poly.poly(), IntPolynomial({3, -1, 1}) * pow(IntPolynomial{3, 1, 1}, 2));
}

TEST(ParseDataset, GenusMismatchNamesBothNumbers) {
  std::string text = kSmall;
  text.replace(text.find("expected_genus=3"), 16, "expected_genus=4");
  try {
    parse_dataset(text);
    FAIL() << "mismatch accepted";
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("expected_genus=4"), std::string::npos) << msg;
    EXPECT_NE(msg.find("3"), std::string::npos) << msg;
    EXPECT_NE(msg.find("toy"), std::string::npos) << msg;
  }
}

int parse_error_line(const std::string& text) {
  try {
    parse_dataset(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(ParseDataset, RejectsBadRecords) {
  const std::string head = "curve_id=t\nexpected_genus=1\nell=3\n";
  // ell divides the level
  EXPECT_EQ(parse_error_line(head + "record label=a level=33 al=+1 h=0,1\n"), 4);
  // non-monic and constant h
  EXPECT_EQ(parse_error_line(head + "record label=a level=11 al=+1 h=0,2\n"), 4);
  EXPECT_EQ(parse_error_line(head + "record label=a level=11 al=+1 h=1\n"), 4);
  // |a_3| <= 2 sqrt(3) fails for a = 4
  EXPECT_EQ(parse_error_line(head + "record label=a level=11 al=+1 h=-4,1\n"), 4);
  EXPECT_EQ(parse_error_line(head + "\nrecord label=a level=11 al=2 h=0,1\n"), 5);
  EXPECT_EQ(parse_error_line(head + "record label=a level=11 al=+1 h=x\n"), 4);
  EXPECT_EQ(parse_error_line("curve_id=t\nexpected_genus=1\n"
                             "record label=a level=11 al=+1 h=0,1\n"),
            3);
  EXPECT_THROW(load_dataset("/nonexistent.dat"), FileNotFound);
}

TEST(Fixtures, GeneraAndValidity) {
  const std::pair<const char*, int> expected[] = {
      {"x0plus_163", 6}, {"x0plus_607", 19}, {"xns_13", 8},
      {"xns_31", 63},    {"xnsplus_31", 28}, {"xnsplus_19_F4", 8}};
  for (const auto& [id, genus] : expected) {
    auto ds = load_dataset(kFixtures + id + ".dat");
    EXPECT_EQ(ds.expected_genus, genus) << id;
    EXPECT_EQ(assemble(ds).genus(), genus) << id;
  }
  // The non-split Cartan curve of level 13 splits as 2 + 3 + 3.
  auto xns13 = load_dataset(kFixtures + "xns_13.dat");
  std::vector<int> degrees;
  for (const auto& r : xns13.records) degrees.push_back(r.h.degree() * r.mult);
  std::sort(degrees.begin(), degrees.end());
  EXPECT_EQ(degrees, (std::vector<int>{2, 3, 3}));

  int checked = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kFixtures)) {
    if (entry.path().extension() != ".dat") continue;
    auto poly = assemble(load_dataset(entry.path().string()));
    EXPECT_FALSE(weil_validate(poly).has_value()) << entry.path();
    ++checked;
  }
  EXPECT_GE(checked, 30);
}

TEST(Assemble, BaseChangeMatchesWeilBaseChange) {
  auto ds = load_dataset(kFixtures + "xnsplus_19_F4.dat");
  ASSERT_EQ(ds.base_change_k, 2);
  auto over_f4 = assemble(ds);
  EXPECT_EQ(over_f4.q(), 4u);
  ds.base_change_k = 1;
  auto over_f2 = assemble(ds);
  EXPECT_EQ(over_f2.q(), 2u);
  EXPECT_EQ(over_f4, weil_base_change(over_f2, 2));
}

TEST(WeilFileFormat, Roundtrip) {
  auto poly = assemble(load_dataset(kFixtures + "x0plus_163.dat"));
  const std::string text = format_weil_file(poly, "x0plus_163");
  auto back = parse_weil_file(text);
  EXPECT_EQ(back.id, "x0plus_163");
  EXPECT_EQ(back.poly, poly);
  EXPECT_EQ(parse_weil_file("weil q=2 g=2 coeffs=4,0,3,0,1\n").poly,
            WeilPolynomial(2, IntPolynomial{4, 0, 3, 0, 1}));
  EXPECT_THROW(parse_weil_file("weil q=2 g=3 coeffs=4,0,3,0,1\n"), ParseError);
  // Shape is checked on parse; the functional equation is left to weil_validate.
  EXPECT_TRUE(weil_validate(parse_weil_file("weil q=2 g=2 coeffs=1,0,0,0,1\n").poly)
                  .has_value());
}

}  // namespace
}  // namespace autexcl
