#include "spectramin/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace spectramin {

namespace {

constexpr long kMaxIterations = 1'000'000;

// Power iteration on A + I over the positive cone. For connected g the
// shifted matrix is primitive, so the Collatz-Wielandt quotients
// min_v (y_v/x_v) and max_v (y_v/x_v) converge and enclose rho + 1 at
// every step.
SpectralResult power_iterate(const Graph& g, double tol, double bail_above, bool want_vector) {
  int n = g.order();
  SpectralResult res;
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), y(n);
  double lo = 0, hi = static_cast<double>(n);
  long it = 0;
  for (; it < kMaxIterations; ++it) {
    double qmin = std::numeric_limits<double>::infinity(), qmax = 0;
    for (int v = 0; v < n; ++v) {
      double s = x[v];
      std::uint64_t row = g.neighbors(v);
      while (row) {
        int u = __builtin_ctzll(row);
        row &= row - 1;
        s += x[u];
      }
      y[v] = s;
      double q = s / x[v];
      qmin = std::min(qmin, q);
      qmax = std::max(qmax, q);
    }
    lo = std::max(lo, qmin - 1.0);
    hi = std::min(hi, qmax - 1.0);
    double norm = 0;
    for (int v = 0; v < n; ++v) norm += y[v] * y[v];
    norm = std::sqrt(norm);
    for (int v = 0; v < n; ++v) x[v] = y[v] / norm;
    if (hi - lo <= tol) break;
    if (lo > bail_above) break;
  }
  if (hi - lo > tol && lo <= bail_above)
    throw ConvergenceError("spectral_radius: no convergence within iteration cap (gap " +
                           std::to_string(hi - lo) + ")");
  res.iterations = it + 1;
  res.lower = lo;
  res.upper = hi;
  // Rayleigh quotient of the final unit vector
  double rho = 0;
  for (int v = 0; v < n; ++v) {
    double s = 0;
    std::uint64_t row = g.neighbors(v);
    while (row) {
      int u = __builtin_ctzll(row);
      row &= row - 1;
      s += x[u];
    }
    y[v] = s;
    rho += x[v] * s;
  }
  res.rho = rho;
  double r = 0;
  for (int v = 0; v < n; ++v) r = std::max(r, std::fabs(y[v] - rho * x[v]));
  res.residual = r;
  if (want_vector) res.eigenvector = std::move(x);
  return res;
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double tol) {
  if (tol <= 0) throw std::invalid_argument("spectral_radius: tol must be positive");
  if (!g.is_connected())
    throw std::invalid_argument("spectral_radius: graph must be connected (use spectral_radius_any)");
  return power_iterate(g, tol, std::numeric_limits<double>::infinity(), true);
}

SpectralResult spectral_radius_any(const Graph& g, double tol) {
  if (tol <= 0) throw std::invalid_argument("spectral_radius: tol must be positive");
  if (g.is_connected()) return power_iterate(g, tol, std::numeric_limits<double>::infinity(), true);

  int n = g.order();
  std::uint64_t all = (n == 64) ? ~0ull : ((1ull << n) - 1);
  std::uint64_t remaining = all;
  SpectralResult best;
  best.rho = -1;
  while (remaining) {
    int start = __builtin_ctzll(remaining);
    std::uint64_t comp = 1ull << start, frontier = comp;
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
    remaining &= ~comp;
    std::vector<int> verts;
    for (std::uint64_t c = comp; c;) {
      int v = __builtin_ctzll(c);
      c &= c - 1;
      verts.push_back(v);
    }
    SpectralResult sub = power_iterate(g.induced(verts), tol, best.rho, false);
    if (sub.lower > best.rho || best.rho < 0) {
      SpectralResult full = power_iterate(g.induced(verts), tol,
                                          std::numeric_limits<double>::infinity(), true);
      if (full.rho > best.rho) {
        best = full;
        std::vector<double> embedded(n, 0.0);
        for (std::size_t i = 0; i < verts.size(); ++i) embedded[verts[i]] = best.eigenvector[i];
        best.eigenvector = std::move(embedded);
      }
    }
  }
  return best;
}

std::pair<double, double> rho_enclosure(const Graph& g, double tol, double bail_above) {
  SpectralResult r = power_iterate(g, tol, bail_above, false);
  return {r.lower, r.upper};
}

double p_mean(const DegreeSequence& d, double p) {
  if (d.empty()) throw std::invalid_argument("p_mean: empty sequence");
  if (p < 1) throw std::invalid_argument("p_mean: p >= 1 required");
  int maxd = *std::max_element(d.begin(), d.end());
  if (maxd == 0) return 0;
  if (std::isinf(p)) return static_cast<double>(maxd);
  double acc = 0;
  for (int v : d) acc += std::pow(static_cast<double>(v) / maxd, p);
  return maxd * std::pow(acc / static_cast<double>(d.size()), 1.0 / p);
}

double char_rho(const Graph& g, double tol) {
  if (!g.is_connected()) throw std::invalid_argument("char_rho: connected graph required");
  DegreeSequence d = g.degrees();
  if (g.is_regular()) return 1.0;
  double rho = spectral_radius(g, std::min(tol * 1e-3, 1e-12)).rho;
  // d^(1) = 2e/n <= rho < Delta = d^(inf): bracket by doubling, then bisect.
  double phi = 2.0;
  while (p_mean(d, phi) < rho) {
    phi *= 2;
    if (phi > std::ldexp(1.0, 40))
      throw std::runtime_error("char_rho: bracket failure (p-mean never reaches rho)");
  }
  double plo = 1.0, phi2 = phi;
  for (int it = 0; it < 200 && phi2 - plo > tol; ++it) {
    double mid = 0.5 * (plo + phi2);
    if (p_mean(d, mid) < rho)
      plo = mid;
    else
      phi2 = mid;
  }
  return 0.5 * (plo + phi2);
}

double rho_lower_bound(const Graph& g) {
  return 2.0 * g.edge_count() / static_cast<double>(g.order());
}

}  // namespace spectramin
