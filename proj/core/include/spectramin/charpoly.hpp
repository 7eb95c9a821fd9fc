#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <span>
#include <vector>

#include "spectramin/graph.hpp"

namespace spectramin {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial with exact integer coefficients; coeffs[i] multiplies x^i.
using IntPoly = std::vector<BigInt>;

/// Exact characteristic polynomial det(xI - A), monic of degree n.
struct CharPoly {
  IntPoly coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool operator==(const CharPoly&) const = default;

  double evaluate(double x) const;
};

/// Faddeev-LeVerrier over exact integers; n <= 24.
CharPoly char_poly(const Graph& g);

/// Largest real root of a polynomial given by double coefficients
/// (coeffs[i] * x^i), searched in [bracket_lo, cauchy bound]. Throws
/// std::domain_error when no real root lies in the bracket.
double largest_real_root(std::span<const double> coeffs, double bracket_lo);

/// Largest real root of an exact integer polynomial, certified by dyadic
/// sign bisection; requires all roots real (adjacency-derived polynomials).
double largest_real_root(const IntPoly& p);

enum class RootOrder { Less, Equal, Greater };

/// Exact comparison of the largest real roots of two integer polynomials
/// with all-real roots. Decides equality through square-free gcd splitting,
/// so distinct polynomials sharing their top root compare Equal.
RootOrder compare_largest_roots(const IntPoly& p, const IntPoly& q);

namespace polydetail {
IntPoly derivative(const IntPoly& p);
IntPoly primitive_part(IntPoly p);
IntPoly poly_gcd(IntPoly a, IntPoly b);
IntPoly divide_exact(const IntPoly& num, const IntPoly& den);
IntPoly square_free_part(const IntPoly& p);
/// Number of real roots of p strictly above a/2^s (exact when all roots
/// of p are real: Descartes' rule is tight in that case).
int count_roots_above(const IntPoly& p, const BigInt& a, int s);
int sign_at_dyadic(const IntPoly& p, const BigInt& a, int s);
}  // namespace polydetail

}  // namespace spectramin
