#include "spectramin/transforms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "spectramin/spectral.hpp"

namespace spectramin {

namespace {

void check_vertex(const Graph& g, int v, const char* what) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument(std::string(what) + ": vertex out of range");
}

}  // namespace

Graph rotate_edge(const Graph& g, const RotationSpec& spec) {
  check_vertex(g, spec.r, "rotate_edge");
  check_vertex(g, spec.s, "rotate_edge");
  check_vertex(g, spec.t, "rotate_edge");
  if (spec.r == spec.t) throw std::invalid_argument("rotate_edge: r != t required");
  if (!g.has_edge(spec.r, spec.s)) throw std::invalid_argument("rotate_edge: rs must be an edge");
  if (g.has_edge(spec.r, spec.t)) throw std::invalid_argument("rotate_edge: rt must be a non-edge");
  return g.without_edge(spec.r, spec.s).with_edge(spec.r, spec.t);
}

Graph local_switch(const Graph& g, const SwitchSpec& spec) {
  int vs[4] = {spec.s, spec.t, spec.u, spec.v};
  for (int x : vs) check_vertex(g, x, "local_switch");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (vs[i] == vs[j]) throw std::invalid_argument("local_switch: vertices must be distinct");
  if (!g.has_edge(spec.s, spec.t) || !g.has_edge(spec.u, spec.v))
    throw std::invalid_argument("local_switch: st and uv must be edges");
  if (g.has_edge(spec.s, spec.v) || g.has_edge(spec.t, spec.u))
    throw std::invalid_argument("local_switch: sv and tu must be non-edges");
  return g.without_edge(spec.s, spec.t)
      .without_edge(spec.u, spec.v)
      .with_edge(spec.s, spec.v)
      .with_edge(spec.t, spec.u);
}

Graph kelmans(const Graph& g, int u, int v) {
  check_vertex(g, u, "kelmans");
  check_vertex(g, v, "kelmans");
  if (u == v) throw std::invalid_argument("kelmans: u != v required");
  std::uint64_t move = g.neighbors(v) & ~g.neighbors(u) & ~(1ull << u);
  Graph out = g;
  while (move) {
    int w = __builtin_ctzll(move);
    move &= move - 1;
    out = out.without_edge(v, w).with_edge(u, w);
  }
  return out;
}

std::vector<std::vector<int>> find_internal_paths(const Graph& g) {
  int n = g.order();
  std::set<std::vector<int>> out;
  for (int a = 0; a < n; ++a) {
    if (g.degree(a) < 3) continue;
    std::uint64_t nb = g.neighbors(a);
    while (nb) {
      int first = __builtin_ctzll(nb);
      nb &= nb - 1;
      // walk a -> first through degree-2 vertices until a non-degree-2 stop
      std::vector<int> seq{a, first};
      int prev = a, cur = first;
      while (g.degree(cur) == 2 && cur != a) {
        std::uint64_t nxt = g.neighbors(cur) & ~(1ull << prev);
        prev = cur;
        cur = __builtin_ctzll(nxt);
        seq.push_back(cur);
      }
      int end = seq.back();
      if (end != a && g.degree(end) < 3) continue;  // dead end at a low-degree vertex
      // canonical orientation: lexicographically smaller of the two traversals
      std::vector<int> rev(seq.rbegin(), seq.rend());
      out.insert(std::min(seq, rev));
    }
  }
  return {out.begin(), out.end()};
}

Graph subdivide_internal(const Graph& g, int v, int w) {
  check_vertex(g, v, "subdivide_internal");
  check_vertex(g, w, "subdivide_internal");
  if (!g.has_edge(v, w)) throw std::invalid_argument("subdivide_internal: vw must be an edge");
  if (g.order() + 1 > kMaxVertices)
    throw std::invalid_argument("subdivide_internal: resulting order exceeds 64");
  bool on_internal = false;
  for (const auto& path : find_internal_paths(g)) {
    for (std::size_t i = 0; i + 1 < path.size() && !on_internal; ++i)
      on_internal = (path[i] == v && path[i + 1] == w) || (path[i] == w && path[i + 1] == v);
    if (on_internal) break;
  }
  if (!on_internal)
    throw std::invalid_argument("subdivide_internal: edge does not lie on an internal path");
  int n = g.order();
  std::vector<std::uint64_t> rows(n + 1, 0);
  for (int x = 0; x < n; ++x) rows[x] = g.neighbors(x);
  rows[v] &= ~(1ull << w);
  rows[w] &= ~(1ull << v);
  rows[v] |= 1ull << n;
  rows[w] |= 1ull << n;
  rows[n] = (1ull << v) | (1ull << w);
  return Graph::from_rows(n + 1, rows);
}

bool hypothesis_rotation(const Graph& g, const RotationSpec& spec) {
  rotate_edge(g, spec);  // validate the structural preconditions
  auto res = spectral_radius(g);
  return res.eigenvector[spec.t] >= res.eigenvector[spec.s] - 1e-12;
}

bool hypothesis_switch(const Graph& g, const SwitchSpec& spec) {
  local_switch(g, spec);  // validate the structural preconditions
  auto res = spectral_radius(g);
  const auto& x = res.eigenvector;
  return (x[spec.s] - x[spec.u]) * (x[spec.v] - x[spec.t]) >= -1e-12;
}

}  // namespace spectramin
