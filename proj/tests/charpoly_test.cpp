#include "spectramin/charpoly.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "spectramin/constructions.hpp"
#include "spectramin/spectral.hpp"

namespace spectramin {
namespace {

IntPoly poly(std::initializer_list<long> coeffs_low_to_high) {
  IntPoly p;
  for (long c : coeffs_low_to_high) p.push_back(c);
  return p;
}

TEST(CharPoly, KnownSmall) {
  EXPECT_EQ(char_poly(complete(2)).coeffs, poly({-1, 0, 1}));         // x^2 - 1
  EXPECT_EQ(char_poly(complete(3)).coeffs, poly({-2, -3, 0, 1}));     // x^3 - 3x - 2
  EXPECT_EQ(char_poly(cycle(4)).coeffs, poly({0, 0, -4, 0, 1}));      // x^4 - 4x^2
}

TEST(CharPoly, VanishesAtRho) {
  for (const Graph& g : {path(7), cycle(9), complete_bipartite(3, 4), b_graph(3, 2, 3)}) {
    CharPoly p = char_poly(g);
    double rho = spectral_radius(g).rho;
    double scale = 0;
    for (const auto& c : p.coeffs) scale = std::max(scale, std::fabs(static_cast<double>(c)));
    EXPECT_LE(std::fabs(p.evaluate(rho)), 1e-6 * scale);
  }
}

TEST(CharPoly, OrderLimit) { EXPECT_THROW(char_poly(path(25)), std::invalid_argument); }

TEST(LargestRealRoot, Quadratics) {
  // x^2 - (n-3)x + 2p + 2 - 2n at (n,p) = (6,1): (3+sqrt(41))/2
  double v = largest_real_root(poly({2 * 1 + 2 - 12, -(6 - 3), 1}));
  EXPECT_NEAR(v, (3 + std::sqrt(41.0)) / 2, 1e-12);
  EXPECT_NEAR(largest_real_root(poly({-1, 0, 1})), 1.0, 1e-12);
}

TEST(LargestRealRoot, DoubleVariant) {
  std::vector<double> q{-1, 0, 1};
  EXPECT_NEAR(largest_real_root(q, -2.0), 1.0, 1e-10);
  std::vector<double> c{2.0, -3.0, 0.0, 1.0};  // (x-1)^2 (x+2)
  EXPECT_NEAR(largest_real_root(c, 0.0), 1.0, 1e-6);
  std::vector<double> none{1.0, 0.0, 1.0};  // x^2 + 1
  EXPECT_THROW(largest_real_root(none, -10.0), std::domain_error);
}

TEST(LargestRealRoot, AgreesWithPowerIteration) {
  for (const Graph& g : {path(6), cycle(8), complete(7), complete_bipartite(2, 5),
                         six_vertex_eight_edge_minimizer(1)}) {
    EXPECT_NEAR(largest_real_root(char_poly(g).coeffs), spectral_radius(g).rho, 1e-9);
  }
}

TEST(CompareLargestRoots, IdenticalPolynomials) {
  IntPoly p = char_poly(cycle(6)).coeffs;
  EXPECT_EQ(compare_largest_roots(p, p), RootOrder::Equal);
}

TEST(CompareLargestRoots, DistinctRoots) {
  IntPoly a = poly({2, -2, -1, 1});   // (x-1)(x^2-2): largest root sqrt(2)
  IntPoly b = poly({6, -2, -3, 1});   // (x-3)(x^2-2): largest root 3
  EXPECT_EQ(compare_largest_roots(a, b), RootOrder::Less);
  EXPECT_EQ(compare_largest_roots(b, a), RootOrder::Greater);
}

TEST(CompareLargestRoots, SharedTopRootDifferentPolys) {
  IntPoly a = poly({-10, -2, 5, 1});  // (x^2-2)(x+5)
  IntPoly b = poly({-14, -2, 7, 1});  // (x^2-2)(x+7)
  EXPECT_EQ(compare_largest_roots(a, b), RootOrder::Equal);
}

TEST(CompareLargestRoots, TheBicyclicPair) {
  // B(3,2,3) and P(3,2,3) have different characteristic polynomials but
  // exactly equal spectral radii
  CharPoly b = char_poly(b_graph(3, 2, 3));
  CharPoly p = char_poly(p_graph(3, 2, 3));
  EXPECT_NE(b.coeffs, p.coeffs);
  EXPECT_EQ(compare_largest_roots(b.coeffs, p.coeffs), RootOrder::Equal);
}

TEST(CompareLargestRoots, MultiplicityAtTop) {
  // (x-2)^2 vs (x-2): equal largest root despite multiplicity mismatch
  IntPoly a = poly({4, -4, 1});
  IntPoly b = poly({-2, 1});
  EXPECT_EQ(compare_largest_roots(a, b), RootOrder::Equal);
  // (x-2)^2 (x-3) vs (x-2): 3 > 2
  IntPoly c = poly({-12, 16, -7, 1});
  EXPECT_EQ(compare_largest_roots(c, b), RootOrder::Greater);
}

}  // namespace
}  // namespace spectramin
