#pragma once

#include <map>
#include <string>
#include <utility>

#include "spectramin/graph.hpp"

namespace spectramin {

enum class Family {
  Path,
  Cycle,
  Complete,
  CompleteBipartite,
  CocktailParty,
  BGraph,
  PGraph,
  Circulant,
  DenseMinimizer,
  NMinus1Choose2Minimizer,
  JoinK2K1,
  JoinP4,
  G2JoinG3Even,
  G2JoinG3Odd,
  NMinus3MinusEdge,
  HalfSquareTwoApex,
  ThirdSquareApex,
  AlonPair,
};

/// A named construction plus integer parameters, with a canonical text
/// form like "g2g3even:n=8,p=1" accepted by the CLI construct command.
struct FamilySpec {
  Family family;
  std::map<std::string, int> params;

  static FamilySpec parse(const std::string& text);
  std::string to_string() const;
  int param(const std::string& name) const;
  int param_or(const std::string& name, int fallback) const;
};

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph cocktail_party(int n);  // even order >= 2; complement of a perfect matching

/// B(p,q,r): cycles of lengths p and r joined by a path with q edges.
/// p + r + q - 1 vertices, p + r + q edges.
Graph b_graph(int p, int q, int r);
/// P(p,q,r): two hub vertices joined by three internally disjoint paths of
/// p, q, r edges. p + q + r - 1 vertices, p + q + r edges.
Graph p_graph(int p, int q, int r);

/// Deterministic d-regular circulant: offsets {1..d/2}, plus the antipodal
/// offset n/2 when d is odd (which forces n even). Throws on parity
/// violation (n*d odd) or infeasible d.
Graph regular_graph(int n, int d);

/// K_{n-2p} v CP_{2p} (CP_n itself when 2p = n): C(n,2) - p edges.
Graph dense_minimizer(int n, int p);

/// The two almost-regular minimizers on 6 vertices and 8 edges; variant 1
/// is the hexagon with two long chords, variant 2 its non-isomorphic twin.
Graph six_vertex_eight_edge_minimizer(int variant);

/// The two-graph family illustrating that higher irregularity does not
/// force a higher spectral radius: a t-regular graph bridged to K_{t+2},
/// and a graph with one vertex of degree 2t+4 and the rest of degree t.
std::pair<Graph, Graph> alon_pair(int t, int n);

/// Dispatcher over the remaining named minimizer families (see Family).
Graph family_minimizer(const FamilySpec& spec);

/// General dispatcher covering every Family tag.
Graph construct(const FamilySpec& spec);

}  // namespace spectramin
