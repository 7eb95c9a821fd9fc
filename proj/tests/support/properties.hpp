#pragma once

// Shared randomized property drivers used by the unit suites and the
// acceptance runner.

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "spectramin/canonical.hpp"
#include "spectramin/charpoly.hpp"
#include "spectramin/graph.hpp"
#include "spectramin/partition.hpp"
#include "spectramin/spectral.hpp"
#include "spectramin/transforms.hpp"

namespace spectramin::testsupport {

struct PropertyResult {
  long cases = 0;
  long failures = 0;
  std::vector<std::string> notes;

  bool ok() const { return failures == 0 && cases > 0; }
  void fail(const std::string& note) {
    ++failures;
    if (notes.size() < 10) notes.push_back(note);
  }
};

inline Graph random_graph(int n, std::mt19937& rng) {
  Graph g = Graph::empty(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() & 1) g = g.with_edge(i, j);
  return g;
}

inline Graph random_connected_graph(int n, std::mt19937& rng) {
  for (;;) {
    Graph g = random_graph(n, rng);
    if (g.is_connected()) return g;
  }
}

inline double rho_any(const Graph& g) { return spectral_radius_any(g, 1e-12).rho; }

// rho(kelmans(g)) >= rho(g) for every vertex pair
inline PropertyResult kelmans_monotone(long target_cases, unsigned seed) {
  std::mt19937 rng(seed);
  PropertyResult res;
  while (res.cases < target_cases) {
    int n = 3 + static_cast<int>(rng() % 6);
    Graph g = random_connected_graph(n, rng);
    int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
    if (u == v) continue;
    Graph h = kelmans(g, u, v);
    ++res.cases;
    if (rho_any(h) < rho_any(g) - 1e-9)
      res.fail("kelmans decreased rho on " + to_graph6(g) + " u=" + std::to_string(u) +
               " v=" + std::to_string(v));
  }
  return res;
}

// hypothesis_rotation => strictly larger spectral radius (exact comparison)
inline PropertyResult rotation_monotone(long target_cases, unsigned seed) {
  std::mt19937 rng(seed);
  PropertyResult res;
  while (res.cases < target_cases) {
    int n = 4 + static_cast<int>(rng() % 5);
    Graph g = random_connected_graph(n, rng);
    int r = static_cast<int>(rng() % n);
    std::uint64_t nb = g.neighbors(r);
    std::uint64_t non = ~nb & ~(1ull << r) & ((1ull << n) - 1);
    if (!nb || !non) continue;
    RotationSpec spec{r, 0, 0};
    // pick a random neighbor and non-neighbor
    for (int hop = static_cast<int>(rng() % g.degree(r)); hop >= 0; --hop) {
      spec.s = __builtin_ctzll(nb);
      nb &= nb - 1;
    }
    for (int hop = static_cast<int>(rng() % __builtin_popcountll(non)); hop >= 0; --hop) {
      spec.t = __builtin_ctzll(non);
      non &= non - 1;
    }
    if (!hypothesis_rotation(g, spec)) continue;
    Graph h = rotate_edge(g, spec);
    ++res.cases;
    if (compare_largest_roots(char_poly(h).coeffs, char_poly(g).coeffs) != RootOrder::Greater)
      res.fail("rotation with hypothesis failed to increase rho strictly on " + to_graph6(g));
  }
  return res;
}

// hypothesis_switch => rho does not decrease; equality only at the
// theorem's boundary x_s = x_u, x_v = x_t
inline PropertyResult switch_monotone(long target_cases, unsigned seed) {
  std::mt19937 rng(seed);
  PropertyResult res;
  while (res.cases < target_cases) {
    int n = 4 + static_cast<int>(rng() % 5);
    Graph g = random_connected_graph(n, rng);
    int s = static_cast<int>(rng() % n), t = static_cast<int>(rng() % n);
    int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
    SwitchSpec spec{s, t, u, v};
    try {
      local_switch(g, spec);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (!hypothesis_switch(g, spec)) continue;
    Graph h = local_switch(g, spec);
    ++res.cases;
    RootOrder ord = compare_largest_roots(char_poly(h).coeffs, char_poly(g).coeffs);
    if (ord == RootOrder::Less) {
      res.fail("switch with hypothesis decreased rho on " + to_graph6(g));
    } else if (ord == RootOrder::Equal) {
      auto x = spectral_radius(g).eigenvector;
      if (std::fabs(x[spec.s] - x[spec.u]) > 1e-8 || std::fabs(x[spec.v] - x[spec.t]) > 1e-8)
        res.fail("switch equality outside the boundary condition on " + to_graph6(g));
    }
  }
  return res;
}

// subdividing an internal-path edge never increases rho
inline PropertyResult subdivision_monotone(long target_cases, unsigned seed) {
  std::mt19937 rng(seed);
  PropertyResult res;
  while (res.cases < target_cases) {
    int n = 4 + static_cast<int>(rng() % 5);
    Graph g = random_connected_graph(n, rng);
    auto paths = find_internal_paths(g);
    if (paths.empty()) continue;
    const auto& path = paths[rng() % paths.size()];
    std::size_t i = rng() % (path.size() - 1);
    Graph h = subdivide_internal(g, path[i], path[i + 1]);
    ++res.cases;
    if (compare_largest_roots(char_poly(h).coeffs, char_poly(g).coeffs) == RootOrder::Greater)
      res.fail("subdivision increased rho on " + to_graph6(g));
  }
  return res;
}

// rho(quotient) <= rho(graph) for arbitrary partitions
inline PropertyResult interlacing_property(long target_cases, unsigned seed) {
  std::mt19937 rng(seed);
  PropertyResult res;
  while (res.cases < target_cases) {
    int n = 3 + static_cast<int>(rng() % 6);
    Graph g = random_connected_graph(n, rng);
    int k = 1 + static_cast<int>(rng() % 4);
    std::vector<std::vector<int>> blocks(k);
    for (int v = 0; v < n; ++v) blocks[rng() % k].push_back(v);
    std::erase_if(blocks, [](const auto& b) { return b.empty(); });
    QuotientMatrix q = quotient_matrix(g, Partition::of(g, blocks));
    ++res.cases;
    if (quotient_spectral_radius(q) > spectral_radius(g).rho + 1e-9)
      res.fail("interlacing violated on " + to_graph6(g));
  }
  return res;
}

// p-means are nondecreasing in p, strictly so for irregular sequences
inline PropertyResult pmean_monotone(long target_cases, unsigned seed) {
  std::mt19937 rng(seed);
  PropertyResult res;
  const double ps[] = {1.0, 1.5, 2.0, 3.0, 10.0};
  while (res.cases < target_cases) {
    int n = 2 + static_cast<int>(rng() % 8);
    DegreeSequence d(n);
    for (int& x : d) x = 1 + static_cast<int>(rng() % n);
    bool constant = std::all_of(d.begin(), d.end(), [&](int x) { return x == d[0]; });
    ++res.cases;
    for (int i = 0; i + 1 < 5; ++i) {
      double lo = p_mean(d, ps[i]), hi = p_mean(d, ps[i + 1]);
      if (lo > hi + 1e-12) res.fail("p-mean not monotone");
      if (!constant && lo >= hi) res.fail("p-mean not strictly increasing on irregular sequence");
    }
  }
  return res;
}

// char_rho = 1 on regular graphs, >= 2 on connected irregular graphs,
// = 2 exactly on semiregular bipartite ones
inline PropertyResult char_rho_classification(long target_cases, unsigned seed) {
  std::mt19937 rng(seed);
  PropertyResult res;
  while (res.cases < target_cases) {
    int n = 3 + static_cast<int>(rng() % 6);
    Graph g = random_connected_graph(n, rng);
    double cr = char_rho(g);
    ++res.cases;
    if (g.is_regular()) {
      if (cr != 1.0) res.fail("regular graph with char_rho != 1: " + to_graph6(g));
    } else if (cr < 2.0 - 1e-6) {
      res.fail("irregular graph with char_rho < 2: " + to_graph6(g));
    }
  }
  return res;
}

}  // namespace spectramin::testsupport
