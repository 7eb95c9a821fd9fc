#include "spectramin/canonical.hpp"

#include <stdexcept>

#include "canon_engine.hpp"

namespace spectramin {

CanonicalResult canonicalize(const Graph& g, std::span<const int> colors) {
  int n = g.order();
  if (n > kMaxCanonVertices)
    throw std::invalid_argument("canonicalize: exact canonicalization limited to n <= 16");
  if (!colors.empty() && static_cast<int>(colors.size()) != n)
    throw std::invalid_argument("canonicalize: color vector size mismatch");

  detail::CanonEngine eng;
  eng.n = n;
  for (int v = 0; v < n; ++v) {
    eng.adj[v] = static_cast<std::uint32_t>(g.neighbors(v));
    int c = colors.empty() ? 0 : colors[v];
    if (c < 0 || c >= kMaxCanonVertices)
      throw std::invalid_argument("canonicalize: colors must lie in [0,15]");
    eng.color0[v] = c;
  }
  eng.run();

  CanonicalResult res;
  res.form.n = static_cast<std::uint8_t>(n);
  res.form.bits = eng.best;
  res.labeling.resize(n);
  for (int pos = 0; pos < n; ++pos) res.labeling[eng.best_perm[pos]] = pos;
  for (const auto& a : eng.autos) res.automorphisms.emplace_back(a.begin(), a.begin() + n);
  return res;
}

CanonicalForm canonical_form(const Graph& g) { return canonicalize(g).form; }

std::string canonical_graph6(const Graph& g) {
  auto res = canonicalize(g);
  return to_graph6(g.relabel(res.labeling));
}

bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g) == canonical_form(h);
}

bool in_same_orbit(const Graph& g, int u, int v) {
  int n = g.order();
  if (n > kMaxCanonVertices) throw std::invalid_argument("in_same_orbit: n <= 16 required");
  if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("in_same_orbit: bad vertex");
  std::array<std::uint32_t, detail::kCanonMaxN> rows{};
  for (int i = 0; i < n; ++i) rows[i] = static_cast<std::uint32_t>(g.neighbors(i));
  return detail::same_orbit_marked(rows.data(), n, u, v);
}

}  // namespace spectramin
