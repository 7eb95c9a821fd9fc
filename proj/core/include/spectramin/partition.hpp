#pragma once

#include <vector>

#include "spectramin/charpoly.hpp"
#include "spectramin/graph.hpp"

namespace spectramin {

/// Ordered partition of V into disjoint, covering, nonempty blocks.
struct Partition {
  std::vector<std::vector<int>> blocks;

  static Partition of(const Graph& g, std::vector<std::vector<int>> blocks);
  static Partition singletons(const Graph& g);
  static Partition whole(const Graph& g);

  int size() const { return static_cast<int>(blocks.size()); }
};

/// Quotient of a partition: entry (i,j) is the average number of neighbors
/// in block j over the vertices of block i. Entries are kept exactly as
/// pair_counts[i][j] / block_sizes[i].
struct QuotientMatrix {
  int k = 0;
  std::vector<double> entries;  // row-major k*k
  bool equitable = false;
  std::vector<long long> pair_counts;
  std::vector<int> block_sizes;

  double at(int i, int j) const { return entries[i * k + j]; }

  /// Characteristic polynomial of the quotient scaled by det(diag sizes):
  /// det(x D - C) with D = diag(block sizes), C = pair counts. Integer
  /// coefficients; its roots are exactly the quotient eigenvalues.
  IntPoly scaled_char_poly() const;
};

QuotientMatrix quotient_matrix(const Graph& g, const Partition& pi);

/// Largest (real) eigenvalue of the quotient, computed exactly from the
/// scaled characteristic polynomial (quotients are diagonally similar to
/// symmetric matrices, so all eigenvalues are real).
double quotient_spectral_radius(const QuotientMatrix& q);

/// Char poly of a small integer matrix (row-major k*k), Faddeev-LeVerrier.
IntPoly char_poly_matrix(const std::vector<BigInt>& m, int k);

}  // namespace spectramin
