#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qf48_cli.hpp"

using qf48::cli::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = qf48::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, CountPrintsOracleValue) {
  const auto r = run({"count", "--form", "q1:1,1,1,4", "--n", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "6\n");
}

TEST(Cli, DecomposeMatchesPrintedRow) {
  const auto r = run({"decompose", "--form", "q2:1,2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc["status"], "ok");
  const std::vector<std::string> expected = {"1/4", "-1/2", "0", "5/4", "0", "0", "0",
                                             "0",   "0",    "0", "0",   "0", "0", "0"};
  EXPECT_EQ(doc["computed"].get<std::vector<std::string>>(), expected);
  EXPECT_TRUE(doc["diffs"].empty());
}

TEST(Cli, ExpandSeries) {
  const auto r = run({"expand", "--name", "hexagonal", "--prec", "30", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["series"]["precision"], 30);
  EXPECT_EQ(doc["series"]["coeffs"][1], "6");
  const auto eta = run({"expand", "--eta", "2^1 4^1 6^1 12^1", "--prec", "30", "--json"});
  ASSERT_EQ(eta.code, 0) << eta.err;
  EXPECT_EQ(json::parse(eta.out)["series"]["coeffs"][5], "-2");
}

TEST(Cli, FormulaReportsOracle) {
  const auto r = run({"formula", "--name", "N2_1_2", "--n", "6", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["value"], "42");
  EXPECT_EQ(doc["oracle"], 42);
  EXPECT_EQ(doc["agrees"], true);
  const auto closed = run({"formula", "--name", "N3_1_3_1_closed", "--n", "4"});
  EXPECT_EQ(closed.out, "36\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"count", "--form", "q1:1,x", "--n", "1"}).code, 2);
  EXPECT_EQ(run({"decompose", "--form", "q1:1,1,1,1"}).code, 2);
  EXPECT_EQ(run({"formula", "--name", "N9_9", "--n", "1"}).code, 2);
  EXPECT_EQ(run({"basis", "--space", "chi5"}).code, 2);
  EXPECT_EQ(run({"basis", "--space", "chi0", "--prec", "10"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, PrecisionFromEnvironment) {
  ::setenv("QF48_PRECISION", "40", 1);
  const auto r = run({"expand", "--name", "theta", "--json"});
  ::unsetenv("QF48_PRECISION");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["series"]["precision"], 40);
}

TEST(Cli, OutputFile) {
  const std::string path = ::testing::TempDir() + "qf48_cli_out.json";
  const auto r = run({"basis", "--space", "chi8", "--prec", "30", "--json", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  const json doc = json::parse(f);
  EXPECT_EQ(doc["elements"].size(), 12u);
  std::remove(path.c_str());
}

TEST(Cli, VerifyTablesIsDeterministic) {
  const auto a = run({"verify-tables", "--json", "--jobs", "2"});
  const auto b = run({"verify-tables", "--json"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const json doc = json::parse(a.out);
  EXPECT_EQ(doc["summary"]["confirmed"], 98);
  EXPECT_FALSE(doc["paper_discrepancies"].empty());
}

TEST(Cli, VerifyAllCoversEveryForm) {
  const auto r = run({"verify-all", "--nmax", "200", "--json"});
  EXPECT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["status"], "ok");
  EXPECT_EQ(doc["form_counts"]["q1"], 55);
  EXPECT_EQ(doc["form_counts"]["q2"], 4);
  EXPECT_EQ(doc["form_counts"]["q3"], 65);
  EXPECT_EQ(doc["forms"].size(), 124u);
  for (const auto& f : doc["forms"]) {
    EXPECT_EQ(f["theta_vs_oracle_mismatches"], 0) << f["form"];
    EXPECT_EQ(f["formula_vs_oracle_mismatches"], 0) << f["form"];
  }
  for (const char* s : {"chi0", "chi8", "chi12", "chi24"})
    EXPECT_EQ(doc["ranks"][s], qf48::space_dimension(qf48::parse_space(s)));
}
