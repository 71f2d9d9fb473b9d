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

#include <filesystem>
#include <fstream>

#include "commands.h"
#include "support/naive.h"

namespace autexcl::cli {
namespace {

namespace fs = std::filesystem;

const std::string kFixtures = AUTEXCL_TEST_FIXTURES_DIR;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("autexcl_cli_" + std::to_string(::testing::UnitTest::GetInstance()
                                                  ->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  fs::path path_;
};

TEST(Exclude, FixtureGolden) {
  auto r = run_cli({"exclude", "--fixture", "x0plus_163", "--prime-power", "2",
                    "--fixtures", kFixtures});
  EXPECT_EQ(r.exit_code, kExcluded) << r.err;
  EXPECT_EQ(r.out, "x0plus_163\t6\t2\t2^1\tExcluded\t53\t15\t14\n");
}

TEST(Exclude, InlineCoefficientsInconclusive) {
  auto r = run_cli({"exclude", "--coeffs", "4,0,3,0,1", "--q", "2",
                    "--prime-power", "2", "--nmax", "40"});
  EXPECT_EQ(r.exit_code, kInconclusive);
  EXPECT_EQ(r.out, "inline\t2\t2\t2^1\tInconclusive\t-\t1\t6\n");
}

TEST(Exclude, ErrorsMapToExitCodes) {
  EXPECT_EQ(run_cli({"exclude", "--fixture", "nope", "--prime-power", "2",
                     "--fixtures", kFixtures})
                .exit_code,
            kFileNotFound);
  EXPECT_EQ(run_cli({"exclude", "--prime-power", "2"}).exit_code, kInputError);
  EXPECT_EQ(run_cli({"exclude", "--coeffs", "4,0,3,0,1", "--q", "2",
                     "--prime-power", "4"})
                .exit_code,
            kInputError);
  // Fails the functional equation.
  EXPECT_EQ(run_cli({"exclude", "--coeffs", "1,0,0,0,1", "--q", "2",
                     "--prime-power", "2"})
                .exit_code,
            kInputError);
  EXPECT_EQ(run_cli({"nosuchcommand"}).exit_code, kInputError);
}

TEST(Exclude, DatasetSource) {
  auto r = run_cli({"exclude", "--dataset", kFixtures + "/hecke/xns_13.dat",
                    "--prime-power", "3"});
  EXPECT_EQ(r.exit_code, kExcluded) << r.err;
  EXPECT_EQ(r.out, "xns_13\t8\t3\t3^1\tExcluded\t16\t12\t10\n");
}

TEST(Ingest, WritesWeilFileThatExcludeReads) {
  TempDir tmp;
  const std::string out = tmp.write("x0plus_163.weil", "");
  auto r = run_cli({"ingest", kFixtures + "/hecke/x0plus_163.dat", "-o", out});
  ASSERT_EQ(r.exit_code, kOk) << r.err;
  auto e = run_cli({"exclude", "--weil", out, "--prime-power", "2"});
  EXPECT_EQ(e.exit_code, kExcluded) << e.err;
  EXPECT_EQ(e.out, "x0plus_163\t6\t2\t2^1\tExcluded\t53\t15\t14\n");
}

TEST(Ingest, GenusMismatchIsInputError) {
  TempDir tmp;
  const std::string path = tmp.write(
      "bad.dat",
      "curve_id=bad\nexpected_genus=5\nell=3\n"
      "record label=a level=11 al=+1 h=-1,1 mult=1\n");
  auto r = run_cli({"ingest", path});
  EXPECT_EQ(r.exit_code, kInputError);
  EXPECT_NE(r.err.find("expected_genus=5"), std::string::npos) << r.err;
  EXPECT_EQ(run_cli({"ingest", tmp.write("x", "") + ".missing"}).exit_code,
            kFileNotFound);
}

TEST(Ingest, BaseChangeDatasetReportsSquaredField) {
  auto r = run_cli({"exclude", "--dataset",
                    kFixtures + "/hecke/xnsplus_19_F4.dat", "--prime-power",
                    "2", "--nmax", "30"});
  ASSERT_TRUE(r.exit_code == kExcluded || r.exit_code == kInconclusive) << r.err;
  EXPECT_EQ(r.out.rfind("xnsplus_19_F4\t8\t4\t2^1\t", 0), 0u) << r.out;
}

TEST(Reproduce, OrderEightGolden) {
  auto r = run_cli({"reproduce", "xns_step5_ord8", "--fixtures", kFixtures});
  EXPECT_EQ(r.exit_code, kOk) << r.err;
  EXPECT_EQ(r.out,
            "curve_id\tg\tq\tN^m\tbound\trange\texpected\tcomputed\tn_star\t"
            "S(n_star)\tstatus\n"
            "xns_13\t8\t3\t2^3\t30\t1..15\t34\t34\t15\t34\tMATCH\n"
            "xns_19\t20\t5\t2^3\t54\t1..34\t58\t58\t34\t58\tMATCH\n");
}

TEST(Reproduce, JobsDoNotChangeOutput) {
  auto one = run_cli({"reproduce", "x0plus", "--fixtures", kFixtures, "--jobs", "1"});
  auto many = run_cli({"reproduce", "x0plus", "--fixtures", kFixtures, "--jobs", "8"});
  EXPECT_EQ(one.exit_code, kOk);
  EXPECT_EQ(one.out, many.out);
  auto exact = run_cli({"reproduce", "x0plus", "--fixtures", kFixtures, "--exact"});
  EXPECT_EQ(one.out, exact.out);
  EXPECT_EQ(run_cli({"reproduce", "nosuchtable"}).exit_code, kInputError);
  // Missing fixtures are a curation gap, reported per row rather than fatal.
  auto none = run_cli({"reproduce", "x0plus", "--fixtures", "/nonexistent"});
  EXPECT_EQ(none.exit_code, kSkipped);
  EXPECT_NE(none.out.find("SKIPPED"), std::string::npos);
}

TEST(Count, WeilSourceTable) {
  auto r = run_cli({"count", "--coeffs", "4,0,3,0,1", "--q", "2", "--nmax", "4"});
  EXPECT_EQ(r.exit_code, kOk) << r.err;
  EXPECT_EQ(r.out, "n\tcount\tR(n)\n1\t3\t3\n2\t11\t8\n3\t9\t6\n4\t15\t4\n");
}

TEST(Oracle, CountMatchesNaiveEnumeration) {
  auto r = run_cli({"oracle", "count", kFixtures + "/curves/hyper_g2_f3.curve",
                    "--nmax", "3"});
  ASSERT_EQ(r.exit_code, kOk) << r.err;
  std::string expected = "n\tcount\tR(n)\n";
  long prev = 0;
  for (int n = 1; n <= 3; ++n) {
    const long c = testing::naive_hyperelliptic_count(3, n, {1, 0, 0, 0, 0, 1}, {});
    // R(n) for n <= 3 needs only the n = 1 subtraction.
    const long rn = n == 1 ? c : c - prev;
    if (n == 1) prev = c;
    expected += std::to_string(n) + "\t" + std::to_string(c) + "\t" +
                std::to_string(rn) + "\n";
  }
  EXPECT_EQ(r.out, expected);
}

TEST(Oracle, ZetaAndSoundness) {
  auto z = run_cli({"oracle", "zeta", kFixtures + "/curves/hyper_g2_f3.curve"});
  ASSERT_EQ(z.exit_code, kOk) << z.err;
  EXPECT_NE(z.out.find("coeffs=9,0,0,0,1"), std::string::npos) << z.out;
  auto s = run_cli({"oracle", "soundness", kFixtures + "/curves/hyper_g2_f5.curve",
                    "--nmax", "30"});
  EXPECT_EQ(s.exit_code, kOk) << s.err;
  EXPECT_NE(s.out.find("PASS"), std::string::npos) << s.out;
  EXPECT_EQ(s.out.find("FAIL"), std::string::npos) << s.out;
}

TEST(Oracle, BadCurveFiles) {
  TempDir tmp;
  EXPECT_EQ(run_cli({"oracle", "count", tmp.write("a", "") + ".missing"}).exit_code,
            kFileNotFound);
  EXPECT_EQ(run_cli({"oracle", "count",
                     tmp.write("b.curve", "curve hyperelliptic p=3 k=1 f=1,0,0,0,1,1\n")})
                .exit_code,
            kOracleFailure);
  EXPECT_EQ(run_cli({"oracle", "count", tmp.write("c.curve", "garbage\n")}).exit_code,
            kInputError);
  // A declared map that does not preserve the curve.
  EXPECT_EQ(run_cli({"oracle", "soundness",
                     tmp.write("d.curve",
                               "curve hyperelliptic p=3 k=1 f=1,0,0,0,0,1\n"
                               "map hyperelliptic a=2 b=0 c=0 d=1 e=1\n")})
                .exit_code,
            kOracleFailure);
}

TEST(Determinism, RepeatedRunsAreIdentical) {
  std::vector<std::string> args{"reproduce", "xns_step3", "--fixtures", kFixtures};
  const auto first = run_cli(args);
  for (int i = 0; i < 3; ++i) {
    const auto again = run_cli(args);
    EXPECT_EQ(again.out, first.out);
    EXPECT_EQ(again.exit_code, first.exit_code);
  }
}

}  // namespace
}  // namespace autexcl::cli
