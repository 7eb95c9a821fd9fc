#pragma once

#include <limits>
#include <stdexcept>
#include <vector>

#include "spectramin/graph.hpp"

namespace spectramin {

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpectralResult {
  double rho = 0;
  std::vector<double> eigenvector;  // unit 2-norm; strictly positive when connected
  double residual = 0;              // ||Ax - rho x||_inf
  long iterations = 0;
  // Certified Collatz-Wielandt enclosure: lower <= rho(G) <= upper.
  double lower = 0;
  double upper = 0;
};

/// Principal eigenpair by power iteration on A + I. Requires a connected
/// graph (Perron positivity); tolerance bounds the certified enclosure
/// width. Iteration cap 10^6.
SpectralResult spectral_radius(const Graph& g, double tol = 1e-12);

/// Spectral radius without the connectivity requirement: maximum over
/// components; the eigenvector is supported on an extremal component.
SpectralResult spectral_radius_any(const Graph& g, double tol = 1e-12);

/// Certified enclosure of rho(G) only; stops early once the lower bound
/// exceeds bail_above (useful when scanning for minima).
std::pair<double, double> rho_enclosure(const Graph& g, double tol,
                                        double bail_above = std::numeric_limits<double>::infinity());

/// p-mean of a degree sequence: ((1/n) sum d_i^p)^(1/p); p = infinity gives
/// the maximum. Requires p >= 1 and a nonempty sequence.
double p_mean(const DegreeSequence& d, double p);

/// Spectral mean characteristic: the p with d^(p) = rho(G). Returns 1 for
/// regular graphs; >= 2 for connected irregular graphs.
double char_rho(const Graph& g, double tol = 1e-9);

/// 2e/n, with equality against rho(G) exactly for regular graphs.
double rho_lower_bound(const Graph& g);

}  // namespace spectramin
