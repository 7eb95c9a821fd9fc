#include "spectramin/partition.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "spectramin/constructions.hpp"
#include "spectramin/enumerate.hpp"
#include "spectramin/spectral.hpp"

namespace spectramin {
namespace {

TEST(Partition, Validation) {
  Graph g = cycle(4);
  EXPECT_THROW(Partition::of(g, {{0, 1}}), std::invalid_argument);          // not covering
  EXPECT_THROW(Partition::of(g, {{0, 1}, {1, 2, 3}}), std::invalid_argument);  // overlap
  EXPECT_THROW(Partition::of(g, {{0, 1, 2, 3}, {}}), std::invalid_argument);   // empty block
  EXPECT_THROW(Partition::of(g, {{0, 1, 2, 5}}), std::invalid_argument);       // out of range
  EXPECT_NO_THROW(Partition::of(g, {{0, 2}, {1, 3}}));
}

TEST(Quotient, DenseMinimizerTwoBlocks) {
  // K_{n-2p} v CP_{2p} with blocks {clique, cocktail party}:
  // [[n-2p-1, 2p], [n-2p, 2p-2]], equitable
  for (auto [n, p] : std::vector<std::pair<int, int>>{{6, 1}, {8, 2}, {10, 3}}) {
    Graph g = dense_minimizer(n, p);
    std::vector<int> a, b;
    for (int v = 0; v < n - 2 * p; ++v) a.push_back(v);
    for (int v = n - 2 * p; v < n; ++v) b.push_back(v);
    QuotientMatrix q = quotient_matrix(g, Partition::of(g, {a, b}));
    EXPECT_TRUE(q.equitable);
    EXPECT_DOUBLE_EQ(q.at(0, 0), n - 2 * p - 1);
    EXPECT_DOUBLE_EQ(q.at(0, 1), 2 * p);
    EXPECT_DOUBLE_EQ(q.at(1, 0), n - 2 * p);
    EXPECT_DOUBLE_EQ(q.at(1, 1), 2 * p - 2);
  }
}

TEST(Quotient, SingletonsGiveAdjacency) {
  Graph g = b_graph(3, 2, 3);
  QuotientMatrix q = quotient_matrix(g, Partition::singletons(g));
  EXPECT_TRUE(q.equitable);
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j) EXPECT_DOUBLE_EQ(q.at(i, j), g.has_edge(i, j) ? 1 : 0);
  EXPECT_NEAR(quotient_spectral_radius(q), spectral_radius(g).rho, 1e-10);
}

TEST(Quotient, WholePartition) {
  Graph g = path(5);
  QuotientMatrix q = quotient_matrix(g, Partition::whole(g));
  EXPECT_FALSE(q.equitable);  // path is irregular
  EXPECT_DOUBLE_EQ(q.at(0, 0), 2.0 * g.edge_count() / g.order());
  Graph c = cycle(5);
  EXPECT_TRUE(quotient_matrix(c, Partition::whole(c)).equitable);
}

TEST(Quotient, OneByOne) {
  Graph c = cycle(6);
  QuotientMatrix q = quotient_matrix(c, Partition::whole(c));
  EXPECT_NEAR(quotient_spectral_radius(q), 2.0, 1e-12);
}

TEST(Quotient, KnownEigenvalue) {
  // [[0, n-2], [2, n-5]] at n = 10 -> (5 + sqrt(89))/2
  QuotientMatrix q;
  q.k = 2;
  q.block_sizes = {2, 8};
  q.pair_counts = {2 * 0, 2 * 8, 8 * 2, 8 * 5};  // entries [[0,8],[2,5]] at n=10
  q.entries = {0, 8, 2, 5};
  q.equitable = true;
  EXPECT_NEAR(quotient_spectral_radius(q), (5 + std::sqrt(89.0)) / 2, 1e-12);
}

TEST(Quotient, InterlacingOnRandomPartitions) {
  std::mt19937 rng(31);
  long cases = 0;
  for (int n = 4; n <= 8; ++n) {
    for (int trial = 0; trial < 120; ++trial) {
      Graph g = Graph::empty(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (rng() & 1) g = g.with_edge(i, j);
      if (!g.is_connected()) continue;
      int k = 1 + static_cast<int>(rng() % 3);
      std::vector<std::vector<int>> blocks(k);
      for (int v = 0; v < n; ++v) blocks[rng() % k].push_back(v);
      std::erase_if(blocks, [](const auto& b) { return b.empty(); });
      QuotientMatrix q = quotient_matrix(g, Partition::of(g, blocks));
      double rho = spectral_radius(g).rho;
      EXPECT_LE(quotient_spectral_radius(q), rho + 1e-9);
      ++cases;
    }
  }
  EXPECT_GE(cases, 300);
}

TEST(Quotient, EquitableEqualityOnConstructions) {
  // join constructions carry equitable partitions whose quotient shares rho
  for (auto [n, p] : std::vector<std::pair<int, int>>{{6, 1}, {8, 2}, {9, 1}}) {
    Graph g = dense_minimizer(n, p);
    std::vector<int> a, b;
    for (int v = 0; v < n - 2 * p; ++v) a.push_back(v);
    for (int v = n - 2 * p; v < n; ++v) b.push_back(v);
    QuotientMatrix q = quotient_matrix(g, Partition::of(g, {a, b}));
    ASSERT_TRUE(q.equitable);
    EXPECT_NEAR(quotient_spectral_radius(q), spectral_radius(g).rho, 1e-9);
  }
}

TEST(Quotient, EquitableFlagDetectsNonuniformity) {
  Graph g = path(4);
  QuotientMatrix q = quotient_matrix(g, Partition::of(g, {{0, 1}, {2, 3}}));
  EXPECT_FALSE(q.equitable);
}

TEST(CharPolyMatrix, ThreeByThree) {
  // [[0,2,n-6],[1,2,n-6],[2,4,n-9]] at n=10: x^3 - 3x^2 - 24x - 14
  std::vector<BigInt> m{0, 2, 4, 1, 2, 4, 2, 4, 1};
  IntPoly p = char_poly_matrix(m, 3);
  EXPECT_EQ(p.size(), 4u);
  EXPECT_EQ(p[3], 1);
  // trace check: coefficient of x^2 is -(trace)
  EXPECT_EQ(p[2], -(0 + 2 + 1));
}

}  // namespace
}  // namespace spectramin
