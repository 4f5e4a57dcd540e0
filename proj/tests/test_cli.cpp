#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "rml/error.hpp"
#include "rml_cli/commands.hpp"
#include "rml_cli/report.hpp"

using namespace rml;
using namespace rml::cli;

namespace {

std::string data(const std::string& file) { return std::string(RML_DATA_DIR) + "/" + file; }

nlohmann::json as_json(const Report& r) { return nlohmann::json::parse(r.render(Format::Json, false)); }

}  // namespace

TEST(Report, ExitCodesFollowVerdicts) {
  Report ok("x");
  ok.verdict("a", true);
  EXPECT_EQ(ok.exit_code(), 0);
  Report bad("x");
  bad.verdict("a", true);
  bad.verdict("b", false, "detail");
  EXPECT_EQ(bad.exit_code(), 1);
  Report err("x");
  err.set_error(2, "broken");
  EXPECT_EQ(err.exit_code(), 2);
}

TEST(Report, CompareUsesRelativeTolerance) {
  Report r("x");
  r.compare("close", {1.0, 1.0}, {1.0, 1.0 + 1e-9}, 1e-6);
  r.compare("far", {1.0, 0.0}, {1.1, 0.0}, 1e-6);
  ASSERT_EQ(r.verdicts().size(), 2u);
  EXPECT_TRUE(r.verdicts()[0].pass);
  EXPECT_FALSE(r.verdicts()[1].pass);
}

TEST(Report, DigestDependsOnInputsOnly) {
  Report a("x"), b("y"), c("x");
  a.add_input("abc");
  b.add_input("abc");
  c.add_input("abd");
  EXPECT_EQ(a.digest(), b.digest());
  EXPECT_NE(a.digest(), c.digest());
}

TEST(Report, TimingsOnlyWhenRequested) {
  Report r("x");
  r.set_timing("total", 1.5);
  EXPECT_FALSE(nlohmann::json::parse(r.render(Format::Json, false)).contains("timings_ms"));
  EXPECT_TRUE(nlohmann::json::parse(r.render(Format::Json, true)).contains("timings_ms"));
}

TEST(ParseRationalList, Forms) {
  const auto v = parse_rational_list("3,-1/2, 4/6", "lambda");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0], Rational(3));
  EXPECT_EQ(v[1], make_rational(-1, 2));
  EXPECT_EQ(v[2], make_rational(2, 3));
  EXPECT_THROW(parse_rational_list("1,x", "lambda"), InputError);
  EXPECT_THROW(parse_rational_list("1/0", "lambda"), InputError);
}

TEST(Commands, VerifyBuiltinExample) {
  const Report r = cmd_verify_example3({}, false);
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_GE(r.verdicts().size(), 4u);
  const Report dropped = cmd_verify_example3({}, true);
  EXPECT_EQ(dropped.exit_code(), 1);
}

TEST(Commands, ReportsAreReproducible) {
  Options o;
  o.format = Format::Json;
  EXPECT_EQ(cmd_verify_example3(o, false).render(Format::Json, false),
            cmd_verify_example3(o, false).render(Format::Json, false));
  EXPECT_EQ(cmd_poles("builtin:example3", o).render(Format::Json, false),
            cmd_poles("builtin:example3", o).render(Format::Json, false));
}

TEST(Commands, PolesOfBuiltin) {
  const auto j = as_json(cmd_poles("builtin:example3", {}));
  EXPECT_EQ(j["exit_code"], 0);
  EXPECT_TRUE(j.dump().find("l1 + l2") != std::string::npos);
}

TEST(Commands, GlobalValueOfPrincipalValue) {
  const Report r = cmd_global(data("pv_q1.json"), {});
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Commands, MellinAndTube) {
  EXPECT_EQ(cmd_mellin_check(data("pv_q1.json"), std::nullopt, {"3", "5"}, {}).exit_code(), 0);
  EXPECT_EQ(cmd_mellin_check(data("diag_p1q1.json"), std::nullopt, {"3,3"}, {}).exit_code(), 0);
  EXPECT_EQ(cmd_tube(data("pv_q1.json"), std::nullopt, std::string("1/4"), {}).exit_code(), 0);
}

TEST(Commands, DivisionLemmaFiles) {
  EXPECT_EQ(cmd_divlemma(data("divlemma_pass.json"), {}).exit_code(), 0);
  EXPECT_EQ(cmd_divlemma(data("divlemma_fail.json"), {}).exit_code(), 1);
}

TEST(Commands, DeduceReportsTrace) {
  const Report r = cmd_deduce(2, 1, {});
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_NE(r.render(Format::Table, false).find("g(1,2;3)"), std::string::npos);
}

TEST(Commands, InputErrorsExitTwo) {
  EXPECT_EQ(cmd_poles(data("bad_negative_beta.json"), {}).exit_code(), 2);
  EXPECT_EQ(cmd_poles(data("does_not_exist.json"), {}).exit_code(), 2);
  EXPECT_EQ(cmd_eval(data("pv_q1.json"), std::nullopt, std::string("1,2"), {}).exit_code(), 2);
}

#ifdef RML_BINARY

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(RML_BINARY) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Binary, ExitCodes) {
  EXPECT_EQ(run("example3"), 0);
  EXPECT_EQ(run("example3 --drop-zeta"), 1);
  EXPECT_EQ(run("--format json deduce 2 1"), 0);
  EXPECT_EQ(run("poles " + data("bad_negative_beta.json")), 2);
  EXPECT_EQ(run("no-such-command"), 2);
  EXPECT_EQ(run("divlemma " + data("divlemma_fail.json")), 1);
}

#endif
