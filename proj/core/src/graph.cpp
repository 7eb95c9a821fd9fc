#include "spectramin/graph.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace spectramin {

void Graph::check_order(int n) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("graph order must be in [1, 64], got " + std::to_string(n));
}

Graph Graph::empty(int n) {
  check_order(n);
  Graph g;
  g.n_ = n;
  return g;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g = empty(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    g.add_edge_internal(u, v);
  }
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::from_rows(int n, std::span<const std::uint64_t> rows) {
  check_order(n);
  Graph g;
  g.n_ = n;
  for (int v = 0; v < n; ++v) g.adj_[v] = rows[v];
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

DegreeSequence Graph::degrees() const {
  DegreeSequence d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

int Graph::max_degree() const {
  int m = 0;
  for (int v = 0; v < n_; ++v) m = std::max(m, degree(v));
  return m;
}

int Graph::min_degree() const {
  int m = n_;
  for (int v = 0; v < n_; ++v) m = std::min(m, degree(v));
  return m;
}

bool Graph::is_connected() const {
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f) {
      int v = __builtin_ctzll(f);
      f &= f - 1;
      next |= adj_[v];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  std::uint64_t all = (n_ == 64) ? ~0ull : ((1ull << n_) - 1);
  return seen == all;
}

Graph Graph::with_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v)
    throw std::invalid_argument("with_edge: bad endpoints");
  Graph g = *this;
  g.add_edge_internal(u, v);
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v)
    throw std::invalid_argument("without_edge: bad endpoints");
  Graph g = *this;
  g.adj_[u] &= ~(1ull << v);
  g.adj_[v] &= ~(1ull << u);
  return g;
}

Graph Graph::relabel(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("relabel: bad permutation size");
  Graph g = empty(n_);
  for (int u = 0; u < n_; ++u) {
    std::uint64_t row = adj_[u];
    while (row) {
      int v = __builtin_ctzll(row);
      row &= row - 1;
      if (u < v) g.add_edge_internal(perm[u], perm[v]);
    }
  }
  return g;
}

Graph Graph::induced(std::span<const int> vertices) const {
  int m = static_cast<int>(vertices.size());
  Graph g = empty(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (has_edge(vertices[i], vertices[j])) g.add_edge_internal(i, j);
  return g;
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_) return false;
  for (int v = 0; v < n_; ++v)
    if (adj_[v] != other.adj_[v]) return false;
  return true;
}

Graph make_graph(int n, std::span<const std::pair<int, int>> edges) {
  return Graph::from_edges(n, edges);
}

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  return Graph::from_edges(n, edges);
}

Graph join(const Graph& g, const Graph& h) {
  int n = g.n_ + h.n_;
  if (n > kMaxVertices) throw std::invalid_argument("join: combined order exceeds 64");
  Graph r = Graph::empty(n);
  for (int v = 0; v < g.n_; ++v) r.adj_[v] = g.adj_[v];
  std::uint64_t gmask = (g.n_ == 64) ? ~0ull : ((1ull << g.n_) - 1);
  for (int v = 0; v < h.n_; ++v) r.adj_[g.n_ + v] = (h.adj_[v] << g.n_) | gmask;
  std::uint64_t hmask = ((n == 64) ? ~0ull : ((1ull << n) - 1)) & ~gmask;
  for (int v = 0; v < g.n_; ++v) r.adj_[v] |= hmask;
  return r;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  int n = g.n_ + h.n_;
  if (n > kMaxVertices) throw std::invalid_argument("disjoint_union: combined order exceeds 64");
  Graph r = Graph::empty(n);
  for (int v = 0; v < g.n_; ++v) r.adj_[v] = g.adj_[v];
  for (int v = 0; v < h.n_; ++v) r.adj_[g.n_ + v] = h.adj_[v] << g.n_;
  return r;
}

Graph complement(const Graph& g) {
  Graph r = Graph::empty(g.n_);
  std::uint64_t all = (g.n_ == 64) ? ~0ull : ((1ull << g.n_) - 1);
  for (int v = 0; v < g.n_; ++v) r.adj_[v] = (~g.adj_[v] & all) & ~(1ull << v);
  return r;
}

bool is_connected(const Graph& g) { return g.is_connected(); }

std::string to_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int bit = 0;
  int acc = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bit == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bit = 0;
      }
    }
  }
  if (bit > 0) out.push_back(static_cast<char>((acc << (6 - bit)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("graph6: empty string");
  std::size_t pos = 0;
  int n;
  auto byte = [&](std::size_t i) -> int {
    if (i >= text.size()) throw std::invalid_argument("graph6: truncated header");
    int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
    return c - 63;
  };
  if (static_cast<unsigned char>(text[0]) == 126) {
    if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
      throw std::invalid_argument("graph6: order above supported range");
    n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  } else {
    n = byte(0);
    pos = 1;
  }
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("graph6: order " + std::to_string(n) + " outside [1,64]");
  long nbits = static_cast<long>(n) * (n - 1) / 2;
  std::size_t need = static_cast<std::size_t>((nbits + 5) / 6);
  if (text.size() - pos != need)
    throw std::invalid_argument("graph6: body length mismatch (expected " + std::to_string(need) +
                                " bytes, got " + std::to_string(text.size() - pos) + ")");
  long k = 0;
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = pos; i < text.size(); ++i) {
    int v = byte(i);
    for (int b = 5; b >= 0; --b, ++k) {
      int bitval = (v >> b) & 1;
      if (k >= nbits) {
        if (bitval) throw std::invalid_argument("graph6: nonzero trailing pad bits");
        continue;
      }
      if (bitval) {
        // invert column-order index k -> (row, col)
        long kk = k;
        int col = 1;
        while (kk >= col) {
          kk -= col;
          ++col;
        }
        edges.emplace_back(static_cast<int>(kk), col);
      }
    }
  }
  return Graph::from_edges(n, edges);
}

Graph read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    return from_graph6(line);
  }
  throw std::runtime_error("no graph6 line in " + path);
}

}  // namespace spectramin
