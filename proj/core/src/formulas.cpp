#include "spectramin/formulas.hpp"

#include <algorithm>
#include <cmath>

#include "spectramin/canonical.hpp"
#include "spectramin/partition.hpp"

namespace spectramin {

namespace {

long choose2(long n) { return n * (n - 1) / 2; }

FamilySpec spec_of(Family f, std::map<std::string, int> params) { return FamilySpec{f, std::move(params)}; }

RegimePrediction quadratic_regime(const std::string& tag, int n, long e, int p, long lin,
                                  long constant, std::vector<FamilySpec> families) {
  // monic x^2 + lin*x + constant; value = (-lin + sqrt(lin^2 - 4 constant))/2
  RegimePrediction pred;
  pred.regime = tag;
  pred.n = n;
  pred.e = e;
  pred.p = p;
  pred.defining_poly = IntPoly{BigInt(constant), BigInt(lin), BigInt(1)};
  pred.rho_min = (-static_cast<double>(lin) +
                  std::sqrt(static_cast<double>(lin) * lin - 4.0 * constant)) /
                 2.0;
  pred.families = std::move(families);
  return pred;
}

RegimePrediction matrix_regime(const std::string& tag, int n, long e,
                               const std::vector<long>& m3, std::vector<FamilySpec> families) {
  std::vector<BigInt> m(m3.begin(), m3.end());
  int k = static_cast<int>(std::lround(std::sqrt(static_cast<double>(m3.size()))));
  RegimePrediction pred;
  pred.regime = tag;
  pred.n = n;
  pred.e = e;
  pred.defining_poly = char_poly_matrix(m, k);
  pred.rho_min = largest_real_root(pred.defining_poly);
  pred.families = std::move(families);
  return pred;
}

}  // namespace

std::vector<RegimePrediction> predict(int n, long e) {
  std::vector<RegimePrediction> out;
  if (n < 1 || e < 0) return out;
  long c2 = choose2(n);

  // R1: e = C(n,2) - p for 1 <= p <= n/2
  {
    long p = c2 - e;
    if (p >= 1 && 2 * p <= n) {
      out.push_back(quadratic_regime("R1", n, e, static_cast<int>(p), -(n - 3), 2 * p + 2 - 2L * n,
                                     {spec_of(Family::DenseMinimizer, {{"n", n}, {"p", static_cast<int>(p)}})}));
    }
  }
  // R2: e = C(n-1,2), n >= 5
  if (n >= 5 && e == choose2(n - 1)) {
    out.push_back(quadratic_regime("R2", n, e, 0, -(n - 5), -2L * (n - 2),
                                   {spec_of(Family::NMinus1Choose2Minimizer, {{"n", n}})}));
  }
  // R3: n odd >= 5, e = C(n,2) - (n+1)/2
  if (n >= 5 && n % 2 == 1 && e == c2 - (n + 1) / 2) {
    out.push_back(matrix_regime("R3", n, e,
                                {n - 5L, 2, 1, n - 3L, 1, 0, n - 3L, 0, 0},
                                {spec_of(Family::JoinK2K1, {{"n", n}})}));
  }
  // R4: n even >= 6, e = C(n,2) - (n+2)/2
  if (n >= 6 && n % 2 == 0 && e == c2 - (n + 2) / 2) {
    out.push_back(matrix_regime("R4", n, e,
                                {n - 6L, 2, 2, n - 4L, 1, 1, n - 4L, 1, 0},
                                {spec_of(Family::JoinP4, {{"n", n}})}));
  }
  // R5: n even >= 6, e = C(n,2) - ((n+2)/2 + p), 1 <= p <= (n-4)/2
  if (n >= 6 && n % 2 == 0) {
    long p = c2 - (n + 2) / 2 - e;
    if (p >= 1 && 2 * p <= n - 4) {
      out.push_back(quadratic_regime("R5", n, e, static_cast<int>(p), -(n - 5), -(3L * n - 2 * p - 8),
                                     {spec_of(Family::G2JoinG3Even, {{"n", n}, {"p", static_cast<int>(p)}})}));
    }
  }
  // R6: n odd >= 5, e = C(n,2) - ((n+1)/2 + p), 1 <= p <= (n-3)/2
  if (n >= 5 && n % 2 == 1) {
    long p = c2 - (n + 1) / 2 - e;
    if (p >= 1 && 2 * p <= n - 3) {
      out.push_back(quadratic_regime("R6", n, e, static_cast<int>(p), -(n - 5), -(3L * n - 2 * p - 7),
                                     {spec_of(Family::G2JoinG3Odd, {{"n", n}, {"p", static_cast<int>(p)}})}));
    }
  }
  // R7: n >= 9, e = C(n-1,2) - 2
  if (n >= 9 && e == choose2(n - 1) - 2) {
    RegimePrediction pred;
    pred.regime = "R7";
    pred.n = n;
    pred.e = e;
    pred.defining_poly = IntPoly{BigInt(6 - 2L * n), BigInt(4 * (4 - static_cast<long>(n))),
                                 BigInt(7 - static_cast<long>(n)), BigInt(1)};
    pred.rho_min = largest_real_root(pred.defining_poly);
    pred.families = {spec_of(Family::NMinus3MinusEdge, {{"n", n}, {"variant", 1}}),
                     spec_of(Family::NMinus3MinusEdge, {{"n", n}, {"variant", 2}})};
    out.push_back(pred);
  }
  // R8: n = 2k+1, e = k(k+1)
  if (n % 2 == 1 && n >= 3) {
    long k = (n - 1) / 2;
    if (e == k * (k + 1)) {
      RegimePrediction pred;
      pred.regime = "R8";
      pred.n = n;
      pred.e = e;
      pred.defining_poly = IntPoly{BigInt(-k * (k + 1)), BigInt(0), BigInt(1)};
      pred.rho_min = std::sqrt(static_cast<double>(k) * (k + 1));
      pred.families = {spec_of(Family::CompleteBipartite,
                               {{"a", static_cast<int>(k)}, {"b", static_cast<int>(k + 1)}})};
      out.push_back(pred);
    }
  }
  // R9: n even >= 4, e = n^2/4 - 1
  if (n % 2 == 0 && n >= 4 && 4 * (e + 1) == static_cast<long>(n) * n) {
    RegimePrediction pred = quadratic_regime("R9", n, e, 0, 0, 0, {});
    pred.defining_poly = IntPoly{BigInt(-(n - 2L)), BigInt(-(n - 2L)), BigInt(2)};
    pred.rho_min = (n - 2 + std::sqrt(static_cast<double>(n) * n + 4.0 * n - 12)) / 4.0;
    pred.families = {spec_of(Family::HalfSquareTwoApex, {{"n", n}, {"h", 0}}),
                     spec_of(Family::HalfSquareTwoApex, {{"n", n}, {"h", 1}})};
    out.push_back(pred);
  }
  // R10: 3 | n, n >= 6, e = n^2/3 - 1
  if (n % 3 == 0 && n >= 6 && 3 * (e + 1) == static_cast<long>(n) * n) {
    long m = n / 3;
    RegimePrediction pred;
    pred.regime = "R10";
    pred.n = n;
    pred.e = e;
    pred.defining_poly = IntPoly{BigInt(-2 * m * m + 2 * m), BigInt(1 - 2 * m * m - m),
                                 BigInt(1 - m), BigInt(1)};
    pred.rho_min = largest_real_root(pred.defining_poly);
    pred.families = {spec_of(Family::ThirdSquareApex, {{"n", n}, {"h", 0}})};
    out.push_back(pred);
  }
  // R11: e = n - 1, minimizer P_n
  if (e == n - 1) {
    RegimePrediction pred;
    pred.regime = "R11";
    pred.n = n;
    pred.e = e;
    pred.rho_min = 2.0 * std::cos(M_PI / (n + 1));
    pred.families = {spec_of(Family::Path, {{"n", n}})};
    out.push_back(pred);
  }
  // R12: e = n + 1, the B/P bicyclic pair with k = ceil(n/3)
  if (n >= 7 && e == n + 1) {
    int k = (n + 2) / 3;
    int q = n + 1 - 2 * k;
    Graph b = b_graph(k, q, k);
    Graph p = p_graph(k, q, k);
    CharPoly cb = char_poly(b), cp = char_poly(p);
    if (compare_largest_roots(cb.coeffs, cp.coeffs) != RootOrder::Equal)
      throw FindingError("R12: the B and P constructions disagree on rho at n=" + std::to_string(n));
    RegimePrediction pred;
    pred.regime = "R12";
    pred.n = n;
    pred.e = e;
    pred.defining_poly = cb.coeffs;
    pred.rho_min = largest_real_root(cb.coeffs);
    pred.families = {spec_of(Family::BGraph, {{"p", k}, {"q", q}, {"r", k}}),
                     spec_of(Family::PGraph, {{"p", k}, {"q", q}, {"r", k}})};
    out.push_back(pred);
  }

  for (std::size_t i = 0; i + 1 < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (std::fabs(out[i].rho_min - out[j].rho_min) > 1e-8)
        throw FindingError("overlapping regimes " + out[i].regime + "/" + out[j].regime +
                           " disagree at n=" + std::to_string(n) + " e=" + std::to_string(e));
  return out;
}

namespace {

// g restricted to `rest` is r-regular
bool induced_regular(const Graph& g, std::uint64_t rest, int r) {
  for (std::uint64_t m = rest; m;) {
    int v = __builtin_ctzll(m);
    m &= m - 1;
    if (__builtin_popcountll(g.neighbors(v) & rest) != r) return false;
  }
  return true;
}

bool complete_between(const Graph& g, std::uint64_t a, std::uint64_t b) {
  for (std::uint64_t m = a; m;) {
    int v = __builtin_ctzll(m);
    m &= m - 1;
    if ((g.neighbors(v) & b) != b) return false;
  }
  return true;
}

std::vector<int> vertices_of_degree(const Graph& g, int d) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == d) out.push_back(v);
  return out;
}

std::uint64_t full_mask(int n) { return n == 64 ? ~0ull : ((1ull << n) - 1); }

// join of two regular graphs: sizes (m, l), inner degrees (a, b), m-side
// total degree a+l, l-side total degree b+m; accepts every regular filling
bool is_join_of_regulars(const Graph& g, int m, int a, int l, int b) {
  if (g.order() != m + l) return false;
  std::uint64_t side1 = 0, side2 = 0;
  for (int v = 0; v < g.order(); ++v) {
    int d = g.degree(v);
    if (d == a + l)
      side1 |= 1ull << v;
    else if (d == b + m)
      side2 |= 1ull << v;
    else
      return false;
  }
  if (__builtin_popcountll(side1) != m || __builtin_popcountll(side2) != l) return false;
  return complete_between(g, side1, side2) && induced_regular(g, side1, a) &&
         induced_regular(g, side2, b);
}

// two apices of degree `apex_deg` with disjoint neighborhoods; all other
// vertices of degree apex_deg + 1
bool is_two_apex(const Graph& g, int apex_deg) {
  auto apexes = vertices_of_degree(g, apex_deg);
  if (apexes.size() != 2) return false;
  int u = apexes[0], v = apexes[1];
  if (g.has_edge(u, v)) return false;
  if (g.neighbors(u) & g.neighbors(v)) return false;
  for (int w = 0; w < g.order(); ++w)
    if (w != u && w != v && g.degree(w) != apex_deg + 1) return false;
  return true;
}

}  // namespace

bool is_predicted_minimizer(const Graph& g, const RegimePrediction& pred) {
  if (g.order() != pred.n || g.edge_count() != pred.e)
    throw std::invalid_argument("is_predicted_minimizer: (n, e) of graph and prediction differ");
  int n = pred.n;

  if (pred.regime == "R1") {
    // K_n minus a perfect matching on 2p vertices <=> complement is a p-edge matching
    Graph cg = complement(g);
    return cg.edge_count() == pred.p && cg.max_degree() <= 1;
  }
  if (pred.regime == "R2") return is_join_of_regulars(g, 2, 0, n - 2, n - 5);
  if (pred.regime == "R5") {
    int p = pred.p;
    return is_join_of_regulars(g, n - 2 * p - 2, n - 2 * p - 4, 2 * p + 2, 2 * p - 1);
  }
  if (pred.regime == "R6") {
    int p = pred.p;
    return is_join_of_regulars(g, n - 2 * p - 1, n - 2 * p - 3, 2 * p + 1, 2 * p - 2);
  }
  if (pred.regime == "R3") {
    // H v (K2 u K1): u the unique degree-(n-3) vertex, v,w its non-neighbors
    auto us = vertices_of_degree(g, n - 3);
    if (us.size() != 1) return false;
    int u = us[0];
    std::uint64_t non = full_mask(n) & ~g.neighbors(u) & ~(1ull << u);
    if (__builtin_popcountll(non) != 2) return false;
    int v = __builtin_ctzll(non);
    int w = 63 - __builtin_clzll(non);
    if (!g.has_edge(v, w)) return false;
    std::uint64_t fixed = (1ull << u) | non;
    std::uint64_t rest = full_mask(n) & ~fixed;
    return complete_between(g, fixed, rest) && induced_regular(g, rest, n - 5);
  }
  if (pred.regime == "R4") {
    // H v P4: ends x,y of degree n-3; a = the neighbor of x missing y, etc.
    auto ends = vertices_of_degree(g, n - 3);
    if (ends.size() != 2) return false;
    int x = ends[0], y = ends[1];
    if (g.has_edge(x, y)) return false;
    std::uint64_t ax = g.neighbors(x) & ~g.neighbors(y) & ~(1ull << y);
    std::uint64_t by = g.neighbors(y) & ~g.neighbors(x) & ~(1ull << x);
    if (__builtin_popcountll(ax) != 1 || __builtin_popcountll(by) != 1) return false;
    int a = __builtin_ctzll(ax), b = __builtin_ctzll(by);
    if (!g.has_edge(a, b)) return false;
    std::uint64_t p4 = (1ull << x) | (1ull << y) | ax | by;
    std::uint64_t rest = full_mask(n) & ~p4;
    return complete_between(g, p4, rest) && induced_regular(g, rest, n - 6);
  }
  if (pred.regime == "R7") {
    auto low = vertices_of_degree(g, n - 4);
    if (low.size() != 2) return false;
    std::uint64_t fixed = 0;
    for (int v : low) fixed |= (1ull << v) | (full_mask(n) & ~g.neighbors(v) & ~(1ull << v));
    if (__builtin_popcountll(fixed) != 6) return false;
    std::vector<int> fv;
    for (std::uint64_t m = fixed; m;) {
      fv.push_back(__builtin_ctzll(m));
      m &= m - 1;
    }
    Graph inner = g.induced(fv);
    if (!isomorphic(inner, six_vertex_eight_edge_minimizer(1)) &&
        !isomorphic(inner, six_vertex_eight_edge_minimizer(2)))
      return false;
    std::uint64_t rest = full_mask(n) & ~fixed;
    if (!rest) return true;
    return complete_between(g, fixed, rest) && induced_regular(g, rest, n - 9);
  }
  if (pred.regime == "R8") {
    int k = (n - 1) / 2;
    return is_join_of_regulars(g, k, 0, k + 1, 0);  // K_{k,k+1} = kK1 v (k+1)K1
  }
  if (pred.regime == "R9") return is_two_apex(g, n / 2 - 1);
  if (pred.regime == "R10") {
    auto xs = vertices_of_degree(g, 2 * n / 3 - 1);
    if (xs.size() != 2) return false;
    int x = xs[0], y = xs[1];
    if (g.has_edge(x, y)) return false;
    std::uint64_t s = g.neighbors(x) & g.neighbors(y);
    if (__builtin_popcountll(s) != n / 3) return false;
    for (std::uint64_t m = s; m;) {
      int v = __builtin_ctzll(m);
      m &= m - 1;
      if (g.neighbors(v) & s) return false;  // S independent
    }
    std::uint64_t rest = full_mask(n) & ~s;
    if (!complete_between(g, s, rest)) return false;
    std::vector<int> rv;
    for (std::uint64_t m = rest; m;) {
      rv.push_back(__builtin_ctzll(m));
      m &= m - 1;
    }
    return is_two_apex(g.induced(rv), n / 3 - 1);
  }
  if (pred.regime == "R11") {
    if (!g.is_connected()) return false;
    auto d = g.degrees();
    int ones = 0;
    for (int x : d) {
      if (x == 1)
        ++ones;
      else if (x != 2 && n > 1)
        return false;
    }
    return n == 1 || ones == 2;
  }
  if (pred.regime == "R12") {
    for (const auto& fam : pred.families)
      if (isomorphic(g, construct(fam))) return true;
    return false;
  }
  throw std::invalid_argument("is_predicted_minimizer: unknown regime " + pred.regime);
}

}  // namespace spectramin
