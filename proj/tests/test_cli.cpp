#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "gapvir_cli.hpp"
#include "support.hpp"

using namespace gvtest;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = gapvir::cli::run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string cfg(const std::string& name) { return std::string(GAPVIR_CONFIG_DIR) + "/" + name; }

}  // namespace

TEST(Cli, Bracket) {
  CliRun r = run({"bracket", "--p", "2", "--x", "L[2]", "--y", "L[-2]"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = r.json();
  EXPECT_EQ(j["schema"], "gapvir/1");
  EXPECT_EQ(j["command"], "bracket");
  EXPECT_EQ(j["result"]["bracket"], "4*L[0] + 1/2*C[0]");
  EXPECT_EQ(j["status"], "ok");
}

TEST(Cli, BracketText) {
  CliRun r = run({"bracket", "--p", "2", "--x", "L[2]", "--y", "L[-2]", "--format", "text"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("result.bracket: 4*L[0] + 1/2*C[0]\n"), std::string::npos);
}

TEST(Cli, VermaDims) {
  CliRun r = run({"verma-dims", "--p", "2", "--max-level", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["result"]["dims"], Json::parse("[1,1,2,3,5,7,11,15,22,30,42]"));
}

TEST(Cli, UnitaryCheck) {
  CliRun r = run({"unitary-check", "--p", "2", "--c0", "2", "--l0", "1/16", "--c1", "1", "--beta1", "1", "--max-level", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json res = r.json()["result"];
  EXPECT_EQ(res["verdict"], "unitary");
  EXPECT_EQ(res["agreement"], true);
}

TEST(Cli, UnitaryCheckNonUnitaryIsNotAFailure) {
  CliRun r = run({"unitary-check", "--p", "2", "--c0", "3/2", "--l0", "5/16", "--c1", "1", "--max-level", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["result"]["verdict"], "not-unitary");
}

TEST(Cli, Reducibility) {
  CliRun r = run({"reducibility", "--p", "2", "--l0", "1/16", "--c0", "2", "--c1", "1", "--max-level", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json res = r.json()["result"];
  EXPECT_EQ(res["firstSingularLevel"], 2);
  EXPECT_EQ(res["criterionAgrees"], true);
}

TEST(Cli, SeriesCheckValidAndBroken) {
  CliRun ok = run({"series-check", "--f-matrix", cfg("f_p2_unit.json"), "--a", "1/3", "--b", "1/2"});
  ASSERT_EQ(ok.code, 0) << ok.err;
  EXPECT_EQ(ok.json()["result"]["predicates"]["unitary"], true);
  CliRun bad = run({"series-check", "--f-matrix", cfg("f_p3_broken.json"), "--a", "1/3", "--b", "1/2", "--window", "4"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.json()["status"], "fail");
}

TEST(Cli, ClassifyLowest) {
  CliRun r = run({"classify", "--kind", "lowest", "--p", "2", "--l0", "-1/16", "--c0", "-3/2", "--c1", "-1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["result"]["bucket"], 3);
}

TEST(Cli, ConfigFile) {
  CliRun r = run({"unitary-check", "--config", cfg("boundary_p2.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["config"]["p"], 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"no-such-command"}).code, 2);
  CliRun parse = run({"bracket", "--p", "2", "--x", "L[2", "--y", "L[1]"});
  EXPECT_EQ(parse.code, 2);
  EXPECT_NE(parse.err.find("parse"), std::string::npos);
  EXPECT_EQ(run({"gram", "--p", "2", "--l0", "1/2+"}).code, 2);
  EXPECT_EQ(run({"verma-dims", "--p", "1"}).code, 2);
  EXPECT_EQ(run({"bracket", "--p", "2", "--x", "L[1]", "--y", "L[1]", "--format", "xml"}).code, 2);
}

TEST(Cli, Guardrail) {
  CliRun r = run({"verma-dims", "--p", "2", "--max-level", "25"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("GAPVIR_MAX_LEVEL"), std::string::npos);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args = {"involution-check", "--p", "3", "--kind", "minus", "--seed", "42"};
  CliRun a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  CliRun c = run({"involution-check", "--p", "3", "--kind", "minus", "--seed", "43"});
  EXPECT_NE(a.out, c.out);
}
