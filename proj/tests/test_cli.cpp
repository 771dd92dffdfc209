#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "segcalc_app.hpp"

using namespace segcalc::app;

namespace {

std::string ctx_file() {
  static const std::string path = [] {
    const auto p = std::filesystem::temp_directory_path() / "segcalc_test_ctx.json";
    std::ofstream(p) << R"({"mode":"modular","ell":5,"q":3,"lines":[{"id":"L","f":1,"dual":"L","twist":1,"deg":1}]})";
    return p.string();
  }();
  return path;
}

CommandOutcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "segcalc");
  std::ostringstream progress;
  return run(args, progress);
}

}  // namespace

TEST(Cli, Star) {
  const auto out = call({"star", "--ctx", ctx_file(), "L[0,0]", "L[1,1]"});
  EXPECT_EQ(out.status, Status::Ok);
  EXPECT_EQ(out.payload, "L[0,1]");
  EXPECT_EQ(out.exit_code(), 0);
}

TEST(Cli, LFactorExpand) {
  const auto out = call({"lfactor", "--ctx", ctx_file(), "L[0,0]+L[1,1]", "L[0,0]", "--expand"});
  EXPECT_EQ(out.status, Status::Ok);
  EXPECT_EQ(out.payload, "(1 - X)^-1 * (1 - 2*X)^-1\n1 + 2X + 2X^2 (mod 5)");
}

TEST(Cli, ParseErrorHasColumn) {
  const auto out = call({"parse", "L[0,"});
  EXPECT_EQ(out.status, Status::ParseError);
  EXPECT_NE(out.exit_code(), 0);
  ASSERT_EQ(out.diagnostics.size(), 1u);
  EXPECT_EQ(out.diagnostics[0].column, std::optional<std::size_t>(5));
}

TEST(Cli, ParseWithoutContext) {
  const auto out = call({"parse", "R[3,4] + L[0,0]"});
  EXPECT_EQ(out.status, Status::Ok);
  EXPECT_EQ(out.payload, "L[0,0]+R[3,4]");
}

TEST(Cli, Order) {
  EXPECT_EQ(call({"order", "--ctx", ctx_file(), "L[0,1]", "L[0,0]+L[1,1]"}).payload, "true");
  EXPECT_EQ(call({"order", "--ctx", ctx_file(), "L[0,0]+L[1,1]", "L[0,1]"}).payload, "false");
}

TEST(Cli, AperiodicBelow) {
  const auto out = call({"aperiodic-below", "--n", "3", "L[0,0]+L[1,1]+L[2,2]"});
  EXPECT_EQ(out.payload, "L[0,0]+L[1,2]\nL[0,1]+L[2,2]\nL[1,1]+L[2,3]");
}

TEST(Cli, GenextAndWordOf) {
  EXPECT_EQ(call({"genext", "--n", "3", "--word", "L:0,L:1,L:2"}).payload, "L[0,2]");
  EXPECT_EQ(call({"word-of", "--n", "3", "L[0,0]+L[1,1]"}).payload, "L:1,L:0");
  const auto bad = call({"word-of", "--n", "3", "L[0,0]+L[1,1]+L[2,2]"});
  EXPECT_EQ(bad.status, Status::PreconditionError);
  EXPECT_EQ(bad.diagnostics.at(0).code, "NotAperiodic");
}

TEST(Cli, SerreEq) {
  EXPECT_EQ(call({"serre-eq", "--n", "3", "L:0,L:1,L:0", "L:0,L:0,L:1"}).payload, "true");
  EXPECT_EQ(call({"serre-eq", "--n", "3", "L:0,L:1", "L:1,L:0"}).payload, "false");
  EXPECT_EQ(call({"serre-eq", "--n", "3", "--classical", "L:0,L:0,L:2,L:1,L:0", "L:0,L:2,L:1,L:0,L:0"}).payload, "false");
  EXPECT_EQ(call({"serre-eq", "--n", "3", "L:0", "L:0,L:1"}).status, Status::PreconditionError);
}

TEST(Cli, Divides) {
  EXPECT_EQ(call({"divides", "--ctx", ctx_file(), "L[0,0]", "L[0,0]", "L[0,0]+L[1,1]", "L[0,0]"}).payload, "true");
  EXPECT_EQ(call({"divides", "--ctx", ctx_file(), "L[0,0]+L[1,1]", "L[0,0]", "L[0,0]", "L[0,0]"}).payload, "false");
}

TEST(Cli, Oracle) {
  const auto out = call({"oracle", "genext", "--n", "3", "--p", "101", "--seed", "7", "L[0,0]", "L[1,1]"});
  EXPECT_EQ(out.status, Status::Ok);
  EXPECT_EQ(out.payload, "L[0,1]");
  const auto table = call({"oracle", "check-order", "--n", "2", "--max-deg", "3"});
  EXPECT_EQ(table.status, Status::Ok);
  EXPECT_EQ(table.payload.rfind("PASS  order-oracle", 0), 0u);
}

TEST(Cli, CheckSuite) {
  const auto out = call({"check", "serre", "--max-deg", "4"});
  EXPECT_EQ(out.status, Status::Ok);
  const auto failing = call({"check", "serre", "--classical"});
  EXPECT_EQ(failing.status, Status::CheckFailed);
  EXPECT_EQ(failing.exit_code(), 1);
  EXPECT_NE(failing.payload.find("counterexample"), std::string::npos);
  EXPECT_EQ(call({"check", "nonsense"}).status, Status::PreconditionError);
}

TEST(Cli, JsonSchema) {
  const auto out = call({"star", "--json", "--ctx", ctx_file(), "L[0,0]", "L[1,1]"});
  const auto doc = nlohmann::json::parse(out.payload);
  EXPECT_EQ(doc.at("schema"), 1);
  EXPECT_EQ(doc.at("status"), "OK");
  EXPECT_EQ(doc.at("result").at("text"), "L[0,1]");
  const auto err = nlohmann::json::parse(call({"parse", "--json", "L[0,"}).payload);
  EXPECT_EQ(err.at("status"), "PARSE_ERROR");
  EXPECT_EQ(err.at("diagnostics").at(0).at("column"), 5);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args{"oracle", "genext", "--n", "3", "--seed", "3", "--json", "L[0,1]+L[2,2]", "L[1,2]"};
  EXPECT_EQ(call(args).payload, call(args).payload);
}

TEST(Cli, ModuleErrorsAreDiagnostics) {
  const auto out = call({"lfactor", "L[0,0]", "L[0,0]", "--expand"});
  EXPECT_EQ(out.status, Status::PreconditionError);
  EXPECT_EQ(out.diagnostics.at(0).code, "RequiresModular");
  EXPECT_EQ(call({"star"}).status, Status::ParseError);
  EXPECT_EQ(call({"star", "--ctx", "/nonexistent.json", "L[0,0]", "L[0,0]"}).status, Status::PreconditionError);
}
