#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectramin/charpoly.hpp"
#include "spectramin/constructions.hpp"
#include "spectramin/graph.hpp"

namespace spectramin {

/// Raised when two sources that must agree (overlapping regimes, paired
/// constructions) disagree beyond tolerance: a contradiction worth
/// reporting, distinct from ordinary errors.
struct FindingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Closed-form minimum spectral radius prediction for one covered regime.
struct RegimePrediction {
  std::string regime;  // "R1".."R12"
  int n = 0;
  long e = 0;
  int p = 0;  // regime parameter where applicable (R1, R5, R6), else 0
  double rho_min = 0;
  IntPoly defining_poly;  // empty when the value is not given as a root
  std::vector<FamilySpec> families;
};

/// All regime predictions covering (n, e); empty when uncovered. When
/// several regimes overlap, their values must agree to 1e-8 or a
/// FindingError is thrown.
///
/// Covered regimes (dense first):
///   R1  e = C(n,2)-p, 1<=p<=n/2            : (n-3+sqrt((n+1)^2-8p))/2
///   R2  e = C(n-1,2), n>=5                 : (n-5+sqrt((n-1)^2+8))/2
///   R3  n odd>=5,  e = C(n,2)-(n+1)/2      : top eigenvalue of a 3x3 quotient
///   R4  n even>=6, e = C(n,2)-(n+2)/2      : top eigenvalue of a 3x3 quotient
///   R5  n even>=6, e = C(n,2)-((n+2)/2+p), 1<=p<=(n-4)/2
///   R6  n odd>=5,  e = C(n,2)-((n+1)/2+p), 1<=p<=(n-3)/2
///   R7  n>=9, e = C(n-1,2)-2               : cubic x^3+x^2(7-n)+4x(4-n)+6-2n
///   R8  n=2k+1, e=k(k+1)                   : sqrt(k(k+1)), minimizer K_{k,k+1}
///   R9  n even>=4, e = n^2/4-1             : (n-2+sqrt(n^2+4n-12))/4
///   R10 3|n, n>=6, e = n^2/3-1             : cubic (third-square two-apex family)
///   R11 e = n-1                            : rho(P_n) = 2cos(pi/(n+1))
///   R12 n>=7, e = n+1                      : the B/P bicyclic pair, k = ceil(n/3)
std::vector<RegimePrediction> predict(int n, long e);

/// True iff g realizes one of the predicted minimizer families (structural
/// tests; families with free regular slots accept every filling). Throws
/// std::invalid_argument when (n, e) of g mismatch the prediction.
bool is_predicted_minimizer(const Graph& g, const RegimePrediction& pred);

}  // namespace spectramin
