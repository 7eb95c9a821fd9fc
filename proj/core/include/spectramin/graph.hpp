#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spectramin {

inline constexpr int kMaxVertices = 64;

using DegreeSequence = std::vector<int>;

/// Immutable simple undirected graph on at most 64 vertices.
/// Row v holds the neighbor set of v as a bitmask; the matrix is kept
/// symmetric with a zero diagonal by construction.
class Graph {
 public:
  Graph() : n_(0) { adj_.fill(0); }

  /// n isolated vertices, 1 <= n <= 64.
  static Graph empty(int n);

  /// Build from an edge list. Duplicate edges collapse. Throws
  /// std::invalid_argument on out-of-range endpoints or self-loops.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  /// Internal trusted constructor: rows must already be symmetric, zero-diagonal.
  static Graph from_rows(int n, std::span<const std::uint64_t> rows);

  int order() const { return n_; }
  int edge_count() const;

  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
  std::uint64_t neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return __builtin_popcountll(adj_[v]); }

  DegreeSequence degrees() const;
  int max_degree() const;
  int min_degree() const;
  /// Delta(G) - delta(G).
  int irregularity() const { return max_degree() - min_degree(); }

  bool is_regular() const { return irregularity() == 0; }
  bool is_connected() const;

  /// Copy with one edge added / removed (throws on self-loop or range).
  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  /// Relabelled copy: vertex v of *this becomes perm[v].
  Graph relabel(std::span<const int> perm) const;

  /// Induced subgraph on the given vertices, in the given order.
  Graph induced(std::span<const int> vertices) const;

  bool operator==(const Graph& other) const;

  friend Graph join(const Graph& g, const Graph& h);
  friend Graph disjoint_union(const Graph& g, const Graph& h);
  friend Graph complement(const Graph& g);

 private:
  void add_edge_internal(int u, int v) {
    adj_[u] |= (1ull << v);
    adj_[v] |= (1ull << u);
  }
  static void check_order(int n);

  int n_;
  std::array<std::uint64_t, kMaxVertices> adj_;
};

Graph make_graph(int n, std::span<const std::pair<int, int>> edges);
Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges);

/// Disjoint copies of g and h plus every cross edge.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

bool is_connected(const Graph& g);

// graph6 interchange format (bit-exact: 63-offset printable bytes,
// big-endian groups over the upper triangle in column order).
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

/// Reads the first graph6 line of a fixture file; lines starting with '#'
/// are comments. Throws std::runtime_error if the file has no graph line.
Graph read_graph6_file(const std::string& path);

}  // namespace spectramin
