#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "spectramin/canonical.hpp"
#include "spectramin/constructions.hpp"
#include "spectramin/graph.hpp"

namespace spectramin {
namespace {

std::string cli_path() {
  const char* p = std::getenv("SPECTRAMIN_CLI");
  return p ? p : "spectramin";
}

std::string fixtures_dir() {
  const char* p = std::getenv("SPECTRAMIN_FIXTURES");
  return p ? p : "data/figures";
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  if (!pipe) return {-1, ""};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

TEST(Cli, RhoOnFixtureFile) {
  auto res = run_cli("rho @" + fixtures_dir() + "/min_8_17.g6 --format json");
  ASSERT_EQ(res.exit_code, 0);
  auto j = nlohmann::json::parse(res.out);
  EXPECT_NEAR(j["rho"].get<double>(), 4.281, 1e-3);
  EXPECT_EQ(j["n"], 8);
  EXPECT_EQ(j["e"], 17);
  EXPECT_EQ(j["irregularity"], 1);
}

TEST(Cli, RhoInlineGraph6) {
  auto res = run_cli("rho Bw --format json");  // K3
  ASSERT_EQ(res.exit_code, 0);
  auto j = nlohmann::json::parse(res.out);
  EXPECT_NEAR(j["rho"].get<double>(), 2.0, 1e-9);
  EXPECT_NEAR(j["char_rho"].get<double>(), 1.0, 1e-12);
}

TEST(Cli, ConstructAndDecode) {
  auto res = run_cli("construct g2g3even:n=8,p=1");
  ASSERT_EQ(res.exit_code, 0);
  std::string g6 = res.out.substr(0, res.out.find('\n'));
  Graph g = from_graph6(g6);
  EXPECT_EQ(g.order(), 8);
  EXPECT_EQ(g.edge_count(), 22);
}

TEST(Cli, ConstructInfeasibleExitsTwo) {
  EXPECT_EQ(run_cli("construct circulant:n=7,d=3").exit_code, 2);
  EXPECT_EQ(run_cli("construct thirdsq:n=7").exit_code, 2);
}

TEST(Cli, UsageErrorExitsOne) {
  EXPECT_EQ(run_cli("frobnicate").exit_code, 1);
  EXPECT_EQ(run_cli("minimize --n 6").exit_code, 1);  // missing --e
}

TEST(Cli, TransformRotate) {
  auto res = run_cli("transform Ch rotate:r=1,s=0,t=3 --format json");  // P4 is "Ch"
  ASSERT_EQ(res.exit_code, 0);
  auto j = nlohmann::json::parse(res.out);
  EXPECT_NEAR(j["before"]["rho"].get<double>(), 1.618033988, 1e-6);
  EXPECT_NEAR(j["after"]["rho"].get<double>(), 2.0, 1e-9);
  EXPECT_TRUE(j["hypothesis"].get<bool>());
  EXPECT_FALSE(j["connected_after"].get<bool>());
}

TEST(Cli, TransformBadSpecExitsTwo) {
  EXPECT_EQ(run_cli("transform Ch rotate:r=0,s=2,t=3").exit_code, 2);  // rs is not an edge
  EXPECT_EQ(run_cli("transform Ch kelmans:u=1,v=1").exit_code, 2);
}

TEST(Cli, MinimizeJson) {
  auto res = run_cli("minimize --n 6 --e 8");
  ASSERT_EQ(res.exit_code, 0);
  auto j = nlohmann::json::parse(res.out);
  EXPECT_EQ(j["minimizers"].size(), 2u);
  EXPECT_NEAR(j["rho_min"].get<double>(), 2.7320508075688767, 1e-9);
  EXPECT_TRUE(j["formula"]["match"].get<bool>());
}

TEST(Cli, MinimizeInfeasibleExitsTwo) {
  EXPECT_EQ(run_cli("minimize --n 6 --e 100").exit_code, 2);
  EXPECT_EQ(run_cli("minimize --n 12 --e 13").exit_code, 2);
}

TEST(Cli, TableDeterminismAndCsv) {
  auto a = run_cli("table --nmax 5");
  auto b = run_cli("table --nmax 5");
  ASSERT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  auto csv = run_cli("table --nmax 5 --format csv");
  ASSERT_EQ(csv.exit_code, 0);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')),
            "n,e,rho_min,n_minimizers,max_irregularity,formula_regime,formula_match");
}

TEST(Cli, VerifySmallExitsZero) {
  EXPECT_EQ(run_cli("verify --nmax 5 --workers 2").exit_code, 0);
}

TEST(Cli, BudgetExceededExitsThree) {
  std::string cmd = "SPECTRAMIN_BUDGET_SECS=0.000001 " + cli_path() +
                    " table --nmax 8 >/dev/null 2>/dev/null";
  int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 3);
}

}  // namespace
}  // namespace spectramin
