#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "frobex/config.hpp"
#include "frobex/report.hpp"

using namespace frobex;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Presentation, ParsesAllSections) {
  std::istringstream in(
      "# comment\n[field]\np = 103\nell = 3\n\n[generators]\nx1 = 1 0\nx2 = 0 1  ; trailing\nx3 = 1 1\n"
      "[relations]\nx1 x2 = 1\nx2 x3 -> 2 x1 x3\n[run]\nwindow = 12\n");
  const Presentation pres = parse_presentation(in);
  EXPECT_EQ(pres.p, 103u);
  EXPECT_EQ(pres.ell, 3u);
  ASSERT_EQ(pres.generators.size(), 3u);
  EXPECT_EQ(pres.generators[2].degree, GroupElement({1, 1}));
  EXPECT_EQ(pres.commutation[0][1], 1);
  EXPECT_EQ(pres.commutation[1][0], -1);
  ASSERT_EQ(pres.straightening.size(), 1u);
  EXPECT_EQ(pres.straightening[0].exponent, 2);
  EXPECT_EQ(pres.run.at("window"), "12");
  EXPECT_EQ(pres.generator_index("x2"), 1u);
}

TEST(Presentation, ErrorsCarryLineNumbers) {
  std::istringstream in("[field]\np = 7\n[generators]\nx1 = 1\n[relations]\nx1 x9 = 1\n");
  try {
    (void)parse_presentation(in);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), 6u);
  }
  std::istringstream bad_section("[nope]\n");
  EXPECT_THROW((void)parse_presentation(bad_section), ConfigError);
}

TEST(RunCommand, InputErrorsExitTwo) {
  RunConfig cfg;
  cfg.command = "qas-verify";
  cfg.n = 1;
  cfg.ell = 3;
  cfg.p = 5;
  const RunResult r = run_command(cfg);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.report.find("error: "), std::string::npos);

  RunConfig bad;
  bad.command = "qas-verify";
  bad.C = {{0, 1}, {1, 0}};
  EXPECT_EQ(run_command(bad).exit_code, 2);

  RunConfig unknown;
  unknown.command = "frobnicate";
  EXPECT_EQ(run_command(unknown).exit_code, 2);
}

TEST(RunCommand, ConfigFileErrorsName) {
  const auto path = write_temp("frobex_bad_run.ini", "[field]\nell = 3\n[run]\nwindow = lots\n");
  RunConfig cfg;
  cfg.command = "qweyl-transfer";
  cfg.config_path = path.string();
  const RunResult r = run_command(cfg);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.report.find(":4"), std::string::npos) << r.report;
}

TEST(RunCommand, QasReportIsDeterministic) {
  RunConfig cfg;
  cfg.command = "qas-verify";
  cfg.n = 2;
  cfg.ell = 3;
  cfg.seed = 4;
  const RunResult a = run_command(cfg);
  const RunResult b = run_command(cfg);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.report, b.report);
  EXPECT_NE(a.report.find("verdict: frobenius"), std::string::npos);
  EXPECT_NE(a.report.find("rank: 9"), std::string::npos);
}

TEST(RunCommand, CensusExitsZeroOnRefutation) {
  RunConfig cfg;
  cfg.command = "grassmannian-census";
  cfg.ell = 2;
  const RunResult r = run_command(cfg);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.report.find("verdict: not-frobenius"), std::string::npos);
  EXPECT_NE(r.report.find("symmetry_d: none"), std::string::npos);
}

TEST(RunCommand, SeedFromEnvironment) {
  RunConfig cfg;
  ::setenv("FROBEX_SEED", "42", 1);
  apply_environment(cfg);
  ::unsetenv("FROBEX_SEED");
  EXPECT_EQ(cfg.seed, 42u);
}

TEST(Parsing, DegreeListsAndMatrices) {
  EXPECT_EQ(parse_degree_list("1 0; 0 1"), (std::vector<GroupElement>{GroupElement({1, 0}), GroupElement({0, 1})}));
  EXPECT_EQ(parse_matrix("0 1; -1 0"), (std::vector<std::vector<std::int64_t>>{{0, 1}, {-1, 0}}));
}
