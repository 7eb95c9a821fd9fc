#include "spectramin/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace spectramin {

namespace {

[[noreturn]] void infeasible(const std::string& what) { throw std::invalid_argument(what); }

const std::map<std::string, Family>& tag_map() {
  static const std::map<std::string, Family> m = {
      {"path", Family::Path},
      {"cycle", Family::Cycle},
      {"complete", Family::Complete},
      {"kbip", Family::CompleteBipartite},
      {"cp", Family::CocktailParty},
      {"bgraph", Family::BGraph},
      {"pgraph", Family::PGraph},
      {"circulant", Family::Circulant},
      {"dense", Family::DenseMinimizer},
      {"nm1choose2", Family::NMinus1Choose2Minimizer},
      {"joink2k1", Family::JoinK2K1},
      {"joinp4", Family::JoinP4},
      {"g2g3even", Family::G2JoinG3Even},
      {"g2g3odd", Family::G2JoinG3Odd},
      {"nm3edge", Family::NMinus3MinusEdge},
      {"halfsq", Family::HalfSquareTwoApex},
      {"thirdsq", Family::ThirdSquareApex},
      {"alon", Family::AlonPair},
  };
  return m;
}

std::string tag_of(Family f) {
  for (const auto& [k, v] : tag_map())
    if (v == f) return k;
  return "?";
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
  auto colon = text.find(':');
  std::string tag = text.substr(0, colon);
  auto it = tag_map().find(tag);
  if (it == tag_map().end()) infeasible("unknown family tag '" + tag + "'");
  FamilySpec spec{it->second, {}};
  if (colon == std::string::npos) return spec;
  std::string rest = text.substr(colon + 1);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    auto comma = rest.find(',', pos);
    std::string kv = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) infeasible("bad parameter '" + kv + "'");
    try {
      spec.params[kv.substr(0, eq)] = std::stoi(kv.substr(eq + 1));
    } catch (const std::exception&) {
      infeasible("bad integer in parameter '" + kv + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out = tag_of(family);
  bool first = true;
  for (const auto& [k, v] : params) {
    out += first ? ":" : ",";
    out += k + "=" + std::to_string(v);
    first = false;
  }
  return out;
}

int FamilySpec::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end()) infeasible("family " + tag_of(family) + " missing parameter '" + name + "'");
  return it->second;
}

int FamilySpec::param_or(const std::string& name, int fallback) const {
  auto it = params.find(name);
  return it == params.end() ? fallback : it->second;
}

Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

Graph cycle(int n) {
  if (n < 3) infeasible("cycle: n >= 3 required");
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, e);
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) infeasible("complete_bipartite: both sides must be nonempty");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return Graph::from_edges(a + b, e);
}

Graph cocktail_party(int n) {
  if (n < 2 || n % 2 != 0) infeasible("cocktail_party: even order >= 2 required");
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + n / 2 < n; ++v) e.emplace_back(v, v + n / 2);
  return complement(Graph::from_edges(n, e));
}

Graph b_graph(int p, int q, int r) {
  if (p < 3 || r < 3) infeasible("b_graph: cycle lengths must be >= 3");
  if (q < 1) infeasible("b_graph: connecting path needs >= 1 edge");
  int n = p + r + q - 1;
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < p; ++v) e.emplace_back(v, (v + 1) % p);
  int c2 = p + q - 1;  // first vertex of the second cycle
  for (int v = 0; v < r; ++v) e.emplace_back(c2 + v, c2 + (v + 1) % r);
  int prev = 0;
  for (int i = 0; i < q - 1; ++i) {
    e.emplace_back(prev, p + i);
    prev = p + i;
  }
  e.emplace_back(prev, c2);
  return Graph::from_edges(n, e);
}

Graph p_graph(int p, int q, int r) {
  int lens[3] = {p, q, r};
  int ones = 0;
  for (int l : lens) {
    if (l < 1) infeasible("p_graph: path lengths must be >= 1");
    if (l == 1) ++ones;
  }
  if (ones > 1) infeasible("p_graph: at most one path of length 1 (simple graph)");
  int n = p + q + r - 1;
  std::vector<std::pair<int, int>> e;
  int next = 2;  // 0 and 1 are the hubs
  for (int l : lens) {
    int prev = 0;
    for (int i = 0; i < l - 1; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
    e.emplace_back(prev, 1);
  }
  return Graph::from_edges(n, e);
}

Graph regular_graph(int n, int d) {
  if (n < 1 || d < 0 || d > n - 1) infeasible("regular_graph: need 0 <= d <= n-1");
  if ((static_cast<long>(n) * d) % 2 != 0)
    infeasible("regular_graph: n*d must be even (handshake parity)");
  std::vector<std::pair<int, int>> e;
  for (int off = 1; off <= d / 2; ++off)
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + off) % n);
  if (d % 2 == 1)
    for (int v = 0; v < n / 2; ++v) e.emplace_back(v, v + n / 2);
  Graph g = Graph::from_edges(n, e);
  if (g.edge_count() * 2 != n * d) infeasible("regular_graph: connection set collision");
  return g;
}

Graph dense_minimizer(int n, int p) {
  if (p < 1 || 2 * p > n) infeasible("dense_minimizer: need 1 <= p <= n/2");
  if (2 * p == n) return cocktail_party(n);
  return join(complete(n - 2 * p), cocktail_party(2 * p));
}

Graph six_vertex_eight_edge_minimizer(int variant) {
  switch (variant) {
    case 1:
      // hexagon 0-1-3-4-5-2-0 plus chords 1-2 and 3-5
      return make_graph(6, {{0, 1}, {1, 3}, {3, 4}, {4, 5}, {5, 2}, {2, 0}, {1, 2}, {3, 5}});
    case 2:
      return make_graph(6, {{0, 1}, {1, 3}, {3, 4}, {4, 5}, {2, 3}, {2, 0}, {5, 1}, {2, 5}});
    default:
      infeasible("six_vertex_eight_edge_minimizer: variant must be 1 or 2");
  }
}

namespace {

Graph two_apex(const Graph& h) {
  // apex u adjacent to the first half of V(H), apex v to the second half
  int m = h.order();
  if (m % 2 != 0) infeasible("two_apex: H must have even order");
  Graph g = disjoint_union(h, Graph::empty(2));
  int u = m, v = m + 1;
  for (int w = 0; w < m / 2; ++w) g = g.with_edge(u, w);
  for (int w = m / 2; w < m; ++w) g = g.with_edge(v, w);
  return g;
}

Graph pick_h(int order, int degree, int variant) {
  if (variant == 1) {
    if (order % 2 != 0 || degree != order / 2)
      infeasible("h=1 (bipartite) requires K_{m/2,m/2}-compatible parameters");
    return complete_bipartite(order / 2, order / 2);
  }
  return regular_graph(order, degree);
}

Graph havel_hakimi_connected(std::vector<int> degrees) {
  int n = static_cast<int>(degrees.size());
  long sum = std::accumulate(degrees.begin(), degrees.end(), 0L);
  if (sum % 2 != 0) infeasible("degree sequence has odd sum");
  std::vector<std::uint64_t> rows(n, 0);
  std::vector<int> rem = degrees;
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (int step = 0; step < n; ++step) {
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return rem[a] > rem[b]; });
    int v = idx[0];
    int need = rem[v];
    if (need == 0) break;
    rem[v] = 0;
    int filled = 0;
    for (int i = 1; i < n && filled < need; ++i) {
      int u = idx[i];
      if (rem[u] == 0 || ((rows[v] >> u) & 1)) continue;
      rows[v] |= 1ull << u;
      rows[u] |= 1ull << v;
      --rem[u];
      ++filled;
    }
    if (filled < need) infeasible("degree sequence is not graphical");
  }
  Graph g = Graph::from_rows(n, rows);
  // connectivity repair: swap one edge of the main component with one of
  // another component; degrees are preserved and components merge
  while (!g.is_connected()) {
    std::uint64_t comp = 1, frontier = 1;
    while (frontier) {
      std::uint64_t next = 0, f = frontier;
      while (f) {
        int v = __builtin_ctzll(f);
        f &= f - 1;
        next |= g.neighbors(v);
      }
      frontier = next & ~comp;
      comp |= next;
    }
    int a = -1, b = -1, c = -1, d = -1;
    for (int v = 0; v < n && a < 0; ++v)
      if (((comp >> v) & 1) && g.neighbors(v)) {
        a = v;
        b = __builtin_ctzll(g.neighbors(v));
      }
    for (int v = 0; v < n && c < 0; ++v)
      if (!((comp >> v) & 1) && g.neighbors(v)) {
        c = v;
        d = __builtin_ctzll(g.neighbors(v));
      }
    if (a < 0 || c < 0) infeasible("degree sequence admits no connected realization");
    g = g.without_edge(a, b).without_edge(c, d).with_edge(a, c).with_edge(b, d);
  }
  return g;
}

}  // namespace

std::pair<Graph, Graph> alon_pair(int t, int n) {
  if (t < 1) infeasible("alon_pair: t >= 1 required");
  int h_order = n - t - 2;
  if (h_order < t + 1) infeasible("alon_pair: n too small for a t-regular part");
  if ((static_cast<long>(h_order) * t) % 2 != 0)
    infeasible("alon_pair: (n-t-2)*t must be even");
  if (2 * t + 4 > n - 1) infeasible("alon_pair: G2 needs 2t+4 <= n-1");
  Graph g1 = disjoint_union(regular_graph(h_order, t), complete(t + 2));
  g1 = g1.with_edge(0, h_order);  // the bridge

  std::vector<int> degs(n, t);
  degs[0] = 2 * t + 4;
  if ((static_cast<long>(n - 1) * t + 2 * t + 4) % 2 != 0)
    infeasible("alon_pair: G2 degree sum is odd");
  Graph g2 = havel_hakimi_connected(std::move(degs));
  return {g1, g2};
}

Graph family_minimizer(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::NMinus1Choose2Minimizer: {
      int n = spec.param("n");
      if (n < 5) infeasible("nm1choose2: n >= 5 required (2-regular graph on n-2 vertices)");
      return join(Graph::empty(2), complement(regular_graph(n - 2, 2)));
    }
    case Family::JoinK2K1: {
      int n = spec.param("n");
      if (n < 5 || n % 2 == 0) infeasible("joink2k1: odd n >= 5 required");
      Graph k2k1 = make_graph(3, {{0, 1}});
      return join(regular_graph(n - 3, n - 5), k2k1);
    }
    case Family::JoinP4: {
      int n = spec.param("n");
      if (n < 6 || n % 2 != 0) infeasible("joinp4: even n >= 6 required");
      return join(regular_graph(n - 4, n - 6), path(4));
    }
    case Family::G2JoinG3Even: {
      int n = spec.param("n"), p = spec.param("p");
      if (n % 2 != 0 || n < 6) infeasible("g2g3even: even n >= 6 required");
      if (p < 1 || p > (n - 4) / 2) infeasible("g2g3even: need 1 <= p <= (n-4)/2");
      return join(regular_graph(n - 2 * p - 2, n - 2 * p - 4), regular_graph(2 * p + 2, 2 * p - 1));
    }
    case Family::G2JoinG3Odd: {
      int n = spec.param("n"), p = spec.param("p");
      if (n % 2 == 0 || n < 5) infeasible("g2g3odd: odd n >= 5 required");
      if (p < 1 || p > (n - 3) / 2) infeasible("g2g3odd: need 1 <= p <= (n-3)/2");
      return join(regular_graph(n - 2 * p - 1, n - 2 * p - 3), regular_graph(2 * p + 1, 2 * p - 2));
    }
    case Family::NMinus3MinusEdge: {
      int n = spec.param("n"), variant = spec.param_or("variant", 1);
      Graph g1 = six_vertex_eight_edge_minimizer(variant);
      if (n == 6) return g1;
      if (n < 9) infeasible("nm3edge: n = 6 or n >= 9 required ((n-9)-regular part)");
      return join(g1, regular_graph(n - 6, n - 9));
    }
    case Family::HalfSquareTwoApex: {
      int n = spec.param("n");
      if (n < 4 || n % 2 != 0) infeasible("halfsq: even n >= 4 required");
      return two_apex(pick_h(n - 2, n / 2 - 1, spec.param_or("h", 0)));
    }
    case Family::ThirdSquareApex: {
      int n = spec.param("n");
      if (n < 6 || n % 3 != 0) infeasible("thirdsq: n divisible by 3, n >= 6 required");
      Graph ghat = two_apex(pick_h(2 * n / 3 - 2, n / 3 - 1, spec.param_or("h", 0)));
      return join(Graph::empty(n / 3), ghat);
    }
    case Family::DenseMinimizer:
      return dense_minimizer(spec.param("n"), spec.param("p"));
    case Family::BGraph:
      return b_graph(spec.param("p"), spec.param("q"), spec.param("r"));
    case Family::PGraph:
      return p_graph(spec.param("p"), spec.param("q"), spec.param("r"));
    case Family::AlonPair: {
      auto [g1, g2] = alon_pair(spec.param("t"), spec.param("n"));
      return spec.param_or("g", 1) == 2 ? g2 : g1;
    }
    default:
      infeasible("family_minimizer: not a minimizer family tag");
  }
}

Graph construct(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Path:
      return path(spec.param("n"));
    case Family::Cycle:
      return cycle(spec.param("n"));
    case Family::Complete:
      return complete(spec.param("n"));
    case Family::CompleteBipartite:
      return complete_bipartite(spec.param("a"), spec.param("b"));
    case Family::CocktailParty:
      return cocktail_party(spec.param("n"));
    case Family::Circulant:
      return regular_graph(spec.param("n"), spec.param("d"));
    default:
      return family_minimizer(spec);
  }
}

}  // namespace spectramin
