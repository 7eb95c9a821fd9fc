#pragma once

#include <vector>

#include "spectramin/graph.hpp"

namespace spectramin {

/// Edge rotation: delete rs, add rt. Valid when r~s, r!~t, r != t.
struct RotationSpec {
  int r, s, t;
};

/// Local switching: replace st and uv by sv and tu. Valid when s~t, u~v,
/// s!~v, t!~u, all four distinct.
struct SwitchSpec {
  int s, t, u, v;
};

Graph rotate_edge(const Graph& g, const RotationSpec& spec);
Graph local_switch(const Graph& g, const SwitchSpec& spec);

/// Kelmans transformation: every neighbor w of v with w not adjacent to u
/// (and w != u) is rewired from v to u. Never decreases the spectral
/// radius; preserves the edge count and the u~v adjacency.
Graph kelmans(const Graph& g, int u, int v);

/// Subdivide edge vw (which must lie on an internal path) by one vertex.
Graph subdivide_internal(const Graph& g, int v, int w);

/// All maximal internal paths: vertex sequences whose endpoints have
/// degree >= 3 and interior degree 2, including the cycle case where the
/// two endpoints coincide in a degree->=3 vertex.
std::vector<std::vector<int>> find_internal_paths(const Graph& g);

/// Eigenvector hypotheses under which the theorems guarantee monotonicity.
bool hypothesis_rotation(const Graph& g, const RotationSpec& spec);  // x_t >= x_s
bool hypothesis_switch(const Graph& g, const SwitchSpec& spec);  // (x_s-x_u)(x_v-x_t) >= 0

}  // namespace spectramin
