#include "spectramin/minimize.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>

#include "spectramin/canonical.hpp"
#include "spectramin/constructions.hpp"

namespace spectramin {
namespace {

TEST(Minimizers, SixVerticesEightEdges) {
  MinimizerReport rep = minimizers(6, 8);
  EXPECT_NEAR(rep.rho_min, 1 + std::sqrt(3.0), 1e-10);
  ASSERT_EQ(rep.minimizers.size(), 2u);
  std::set<std::string> got(rep.minimizers.begin(), rep.minimizers.end());
  std::set<std::string> expect{canonical_graph6(six_vertex_eight_edge_minimizer(1)),
                               canonical_graph6(six_vertex_eight_edge_minimizer(2))};
  EXPECT_EQ(got, expect);
  EXPECT_EQ(rep.degree_spread, (std::vector<int>{1, 1}));
  ASSERT_TRUE(rep.formula.has_value());
  EXPECT_TRUE(rep.formula->match);
  EXPECT_EQ(rep.graphs_enumerated, 22);
}

TEST(Minimizers, PathIsUniqueTreeMinimizer) {
  for (int n = 2; n <= 8; ++n) {
    MinimizerReport rep = minimizers(n, n - 1);
    ASSERT_EQ(rep.minimizers.size(), 1u) << n;
    EXPECT_EQ(rep.minimizers[0], canonical_graph6(path(n)));
    EXPECT_NEAR(rep.rho_min, 2 * std::cos(M_PI / (n + 1)), 1e-9);
  }
}

TEST(Minimizers, RegularRegime) {
  MinimizerReport rep = minimizers(6, 12);
  ASSERT_EQ(rep.minimizers.size(), 1u);
  EXPECT_EQ(rep.minimizers[0], canonical_graph6(cocktail_party(6)));
  EXPECT_EQ(rep.degree_spread[0], 0);
  EXPECT_NEAR(rep.rho_min, 4.0, 1e-10);
}

TEST(Minimizers, UnicyclicMinimizerIsTheCycle) {
  MinimizerReport rep = minimizers(7, 7);
  ASSERT_EQ(rep.minimizers.size(), 1u);
  EXPECT_EQ(rep.minimizers[0], canonical_graph6(cycle(7)));
  EXPECT_NEAR(rep.rho_min, 2.0, 1e-12);
}

TEST(Minimizers, BicyclicPair) {
  MinimizerReport rep = minimizers(7, 8);
  ASSERT_EQ(rep.minimizers.size(), 2u);
  std::set<std::string> got(rep.minimizers.begin(), rep.minimizers.end());
  std::set<std::string> expect{canonical_graph6(b_graph(3, 2, 3)),
                               canonical_graph6(p_graph(3, 2, 3))};
  EXPECT_EQ(got, expect);
  ASSERT_TRUE(rep.formula.has_value());
  EXPECT_EQ(rep.formula->regime, "R12");
  EXPECT_TRUE(rep.formula->match);
}

TEST(Minimizers, TwoRegularFillingsTieExactly) {
  // (8,21): 2K1 v G on 6 vertices, G any 3-regular graph; K_{3,3} and the
  // prism both fill the slot, so exactly two minimizers tie
  MinimizerReport rep = minimizers(8, 21, 2);
  EXPECT_EQ(rep.minimizers.size(), 2u);
  ASSERT_TRUE(rep.formula.has_value());
  EXPECT_TRUE(rep.formula->match);
}

TEST(Minimizers, WorkerCountInvariance) {
  MinimizerReport a = minimizers(7, 10, 1);
  MinimizerReport b = minimizers(7, 10, 4);
  EXPECT_EQ(to_json_line(a), to_json_line(b));
}

TEST(VerifyHong, SmallCases) {
  EXPECT_TRUE(verify_hong(7, 7).holds);
  EXPECT_TRUE(verify_hong(6, 12).holds);
  EXPECT_TRUE(verify_hong(6, 8).holds);
  EXPECT_TRUE(verify_hong(5, 7).witnesses.empty());
}

TEST(Report, JsonRoundTrip) {
  MinimizerReport rep = minimizers(6, 9);
  std::string line = to_json_line(rep);
  MinimizerReport back = report_from_json_line(line);
  EXPECT_EQ(to_json_line(back), line);
  MinimizerReport rep2 = minimizers(5, 4);  // formula present (R11)
  EXPECT_EQ(to_json_line(report_from_json_line(to_json_line(rep2))), to_json_line(rep2));
}

TEST(Table, DeterministicReruns) {
  TableOptions opts;
  opts.n_max = 6;
  std::vector<std::string> first, second;
  for (const auto& r : rho_min_table(opts).reports) first.push_back(to_json_line(r));
  for (const auto& r : rho_min_table(opts).reports) second.push_back(to_json_line(r));
  EXPECT_EQ(first, second);
  EXPECT_FALSE(first.empty());
}

TEST(Table, CheckpointResume) {
  std::string path = ::testing::TempDir() + "spectramin_ckpt_test.jsonl";
  std::remove(path.c_str());
  TableOptions opts;
  opts.n_max = 5;
  opts.checkpoint_path = path;
  TableResult fresh = rho_min_table(opts);
  ASSERT_FALSE(fresh.budget_exceeded);

  // resumed run must reuse every line and produce the identical table
  TableResult resumed = rho_min_table(opts);
  ASSERT_EQ(fresh.reports.size(), resumed.reports.size());
  for (std::size_t i = 0; i < fresh.reports.size(); ++i)
    EXPECT_EQ(to_json_line(fresh.reports[i]), to_json_line(resumed.reports[i]));

  // partial checkpoint: drop the last line, rerun, table still identical
  std::vector<std::string> lines;
  {
    std::ifstream in(path);
    std::string l;
    while (std::getline(in, l))
      if (!l.empty()) lines.push_back(l);
  }
  ASSERT_GT(lines.size(), 2u);
  {
    std::ofstream out(path, std::ios::trunc);
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) out << lines[i] << "\n";
  }
  TableResult partial = rho_min_table(opts);
  ASSERT_EQ(partial.reports.size(), fresh.reports.size());
  for (std::size_t i = 0; i < fresh.reports.size(); ++i)
    EXPECT_EQ(to_json_line(partial.reports[i]), to_json_line(fresh.reports[i]));
  std::remove(path.c_str());
}

TEST(Table, DeepSweepNeedsBudget) {
  TableOptions opts;
  opts.n_max = 10;
  EXPECT_THROW(rho_min_table(opts), std::invalid_argument);
}

TEST(Table, BudgetFlagsIncomplete) {
  TableOptions opts;
  opts.n_max = 8;
  opts.budget_secs = 1e-9;
  TableResult res = rho_min_table(opts);
  EXPECT_TRUE(res.budget_exceeded);
}

TEST(Table, EdgeRangeFilter) {
  TableOptions opts;
  opts.n_max = 6;
  opts.e_range = {{8, 9}};
  TableResult res = rho_min_table(opts);
  for (const auto& r : res.reports) {
    EXPECT_GE(r.e, 8);
    EXPECT_LE(r.e, 9);
  }
  EXPECT_EQ(res.reports.size(), 4u);  // (5,8) (5,9) (6,8) (6,9)
}

}  // namespace
}  // namespace spectramin
