#include "spectramin/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spectramin {

double CharPoly::evaluate(double x) const {
  double v = 0;
  for (int i = degree(); i >= 0; --i) v = v * x + static_cast<double>(coeffs[i]);
  return v;
}

CharPoly char_poly(const Graph& g) {
  int n = g.order();
  if (n > 24) throw std::invalid_argument("char_poly: n <= 24 required");

  // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr M_1,
  // M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k) / k (exact division).
  std::vector<BigInt> M(n * n, 0), next(n * n, 0);
  IntPoly c(n + 1, 0);
  c[n] = 1;

  auto a = [&](int i, int j) -> int { return g.has_edge(i, j) ? 1 : 0; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M[i * n + j] = a(i, j);

  BigInt tr = 0;
  for (int i = 0; i < n; ++i) tr += M[i * n + i];
  c[n - 1] = -tr;

  for (int k = 2; k <= n; ++k) {
    // M += c_{n-k+1} I
    for (int i = 0; i < n; ++i) M[i * n + i] += c[n - k + 1];
    // next = A * M  (A is 0/1: sum rows of M over neighbors)
    for (int i = 0; i < n; ++i) {
      std::uint64_t row = g.neighbors(i);
      for (int j = 0; j < n; ++j) next[i * n + j] = 0;
      std::uint64_t r = row;
      while (r) {
        int t = __builtin_ctzll(r);
        r &= r - 1;
        for (int j = 0; j < n; ++j) next[i * n + j] += M[t * n + j];
      }
    }
    M.swap(next);
    tr = 0;
    for (int i = 0; i < n; ++i) tr += M[i * n + i];
    c[n - k] = -tr / k;
  }
  return CharPoly{std::move(c)};
}

namespace polydetail {

static void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly derivative(const IntPoly& p) {
  IntPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<int>(i));
  trim(d);
  return d;
}

static BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
  return g;
}

IntPoly primitive_part(IntPoly p) {
  trim(p);
  if (p.empty()) return p;
  BigInt g = content(p);
  if (p.back() < 0) g = -g;
  for (auto& c : p) c /= g;
  return p;
}

// Pseudo-remainder of a by b (deg a >= deg b >= 0).
static IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
  int da = static_cast<int>(a.size()) - 1;
  int db = static_cast<int>(b.size()) - 1;
  const BigInt& lb = b.back();
  for (int k = da; k >= db; --k) {
    BigInt coef = a[k];
    for (int i = 0; i <= da; ++i) a[i] *= lb;
    for (int i = 0; i <= db; ++i) a[k - db + i] -= coef * b[i];
  }
  a.resize(db > 0 ? db : 0);
  trim(a);
  return a;
}

IntPoly poly_gcd(IntPoly a, IntPoly b) {
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  if (a.size() < b.size()) a.swap(b);
  while (!b.empty()) {
    IntPoly r = primitive_part(pseudo_rem(a, b));
    a.swap(b);
    b.swap(r);
  }
  return a;
}

IntPoly divide_exact(const IntPoly& num, const IntPoly& den) {
  // den must have unit leading coefficient (holds for divisors of monic
  // primitive polynomials).
  if (den.empty()) throw std::invalid_argument("divide_exact: zero divisor");
  if (den.back() != 1 && den.back() != -1)
    throw std::invalid_argument("divide_exact: divisor leading coefficient must be a unit");
  IntPoly rem = num;
  int dn = static_cast<int>(num.size()) - 1;
  int dd = static_cast<int>(den.size()) - 1;
  if (dn < dd) throw std::invalid_argument("divide_exact: degree mismatch");
  IntPoly q(dn - dd + 1, 0);
  for (int k = dn - dd; k >= 0; --k) {
    BigInt coef = rem[k + dd] / den.back();
    q[k] = coef;
    for (int i = 0; i <= dd; ++i) rem[k + i] -= coef * den[i];
  }
  for (const auto& c : rem)
    if (c != 0) throw std::logic_error("divide_exact: nonzero remainder");
  trim(q);
  return q;
}

IntPoly square_free_part(const IntPoly& p) {
  IntPoly pp = primitive_part(p);
  if (pp.size() <= 2) return pp;
  IntPoly g = poly_gcd(pp, derivative(pp));
  if (g.size() <= 1) return pp;
  return primitive_part(divide_exact(pp, g));
}

int sign_at_dyadic(const IntPoly& p, const BigInt& a, int s) {
  // sign of p(a / 2^s) = sign of sum_i c_i a^i 2^{s(deg-i)}
  int deg = static_cast<int>(p.size()) - 1;
  BigInt acc = 0, apow = 1;
  for (int i = 0; i <= deg; ++i) {
    acc += p[i] * apow << (static_cast<unsigned>(s) * (deg - i));
    apow *= a;
  }
  return acc == 0 ? 0 : (acc > 0 ? 1 : -1);
}

int count_roots_above(const IntPoly& p, const BigInt& a, int s) {
  // Taylor shift: q(x) = 2^{s deg} p((x + a)/2^s); roots of q in (0, inf)
  // correspond to roots of p above a/2^s. For real-rooted p, Descartes'
  // sign-variation count of q is exact.
  int deg = static_cast<int>(p.size()) - 1;
  IntPoly q;  // built by Horner: q = q*(x+a) + c_i * 2^{s(deg-i)}
  for (int i = deg; i >= 0; --i) {
    IntPoly nq(q.size() + 1, 0);
    for (std::size_t j = 0; j < q.size(); ++j) {
      nq[j + 1] += q[j];
      nq[j] += q[j] * a;
    }
    if (nq.empty()) nq.resize(1, 0);
    nq[0] += p[i] << (static_cast<unsigned>(s) * (deg - i));
    q = std::move(nq);
  }
  int variations = 0, last = 0;
  for (const auto& c : q) {
    int sg = c == 0 ? 0 : (c > 0 ? 1 : -1);
    if (sg != 0) {
      if (last != 0 && sg != last) ++variations;
      last = sg;
    }
  }
  return variations;
}

static BigInt cauchy_bound(const IntPoly& p) {
  BigInt m = 0;
  for (const auto& c : p) {
    BigInt a = boost::multiprecision::abs(c);
    if (a > m) m = a;
  }
  BigInt lc = boost::multiprecision::abs(p.back());
  return m / lc + 2;
}

}  // namespace polydetail

double largest_real_root(std::span<const double> coeffs, double bracket_lo) {
  int deg = static_cast<int>(coeffs.size()) - 1;
  while (deg > 0 && coeffs[deg] == 0.0) --deg;
  if (deg < 1) throw std::domain_error("largest_real_root: constant polynomial");
  auto eval = [&](double x) {
    double v = 0;
    for (int i = deg; i >= 0; --i) v = v * x + coeffs[i];
    return v;
  };
  double maxc = 0;
  for (int i = 0; i < deg; ++i) maxc = std::max(maxc, std::fabs(coeffs[i]));
  double hi = 1.0 + maxc / std::fabs(coeffs[deg]);
  double sign_inf = coeffs[deg] > 0 ? 1.0 : -1.0;
  // descend from hi looking for a sign change against the +inf sign;
  // assumes the top root is simple and its sign region wider than one step
  double lo = hi;
  double step = std::max(1e-6, (hi - bracket_lo) / 4096.0);
  bool found = false;
  while (lo > bracket_lo - 1e-12) {
    lo -= step;
    if (eval(lo) * sign_inf <= 0) {
      found = true;
      break;
    }
  }
  if (!found) throw std::domain_error("largest_real_root: no real root in bracket");
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (eval(mid) * sign_inf > 0)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

double largest_real_root(const IntPoly& p_in) {
  using namespace polydetail;
  IntPoly p = primitive_part(p_in);
  if (p.size() < 2) throw std::domain_error("largest_real_root: constant polynomial");
  BigInt bound = cauchy_bound(p);
  if (count_roots_above(p, -bound, 0) == 0)
    throw std::domain_error("largest_real_root: no real root");
  // dyadic bisection on "any root strictly above mid"; lo and hi share scale s
  BigInt lo = -bound, hi = bound;
  int s = 0;
  for (int it = 0; it < 64; ++it) {
    BigInt mid = lo + hi;  // value mid / 2^{s+1}
    if (count_roots_above(p, mid, s + 1) >= 1) {
      lo = mid;
      hi <<= 1;
    } else {
      hi = mid;
      lo <<= 1;
    }
    ++s;
  }
  double scale = std::ldexp(1.0, -s);
  return 0.5 * (static_cast<double>(lo) * scale + static_cast<double>(hi) * scale);
}

namespace {

using polydetail::count_roots_above;

// Compare largest roots of two coprime square-free integer polynomials
// (so the roots are strictly distinct, and bisection terminates).
RootOrder cmp_distinct(const IntPoly& f1, const IntPoly& f2) {
  using namespace polydetail;
  bool has1 = f1.size() >= 2, has2 = f2.size() >= 2;
  if (!has1 && !has2) return RootOrder::Equal;  // both rootless: treated as -inf
  if (!has1) return RootOrder::Less;
  if (!has2) return RootOrder::Greater;
  BigInt bound = std::max(cauchy_bound(f1), cauchy_bound(f2));
  BigInt lo = -bound, hi = bound;
  int s = 0;
  for (;;) {
    BigInt mid = lo + hi;  // value mid/2^{s+1}
    bool above1 = count_roots_above(f1, mid, s + 1) >= 1;
    bool above2 = count_roots_above(f2, mid, s + 1) >= 1;
    if (above1 && !above2) return RootOrder::Greater;
    if (!above1 && above2) return RootOrder::Less;
    if (above1) {
      lo = mid;
      hi <<= 1;
    } else {
      hi = mid;
      lo <<= 1;
    }
    ++s;
    if (s > 4096) throw std::logic_error("cmp_distinct: roots failed to separate");
  }
}

}  // namespace

RootOrder compare_largest_roots(const IntPoly& p_in, const IntPoly& q_in) {
  using namespace polydetail;
  IntPoly p = primitive_part(p_in), q = primitive_part(q_in);
  if (p == q) return RootOrder::Equal;
  IntPoly ps = square_free_part(p), qs = square_free_part(q);
  if (ps == qs) return RootOrder::Equal;
  IntPoly g = poly_gcd(ps, qs);
  IntPoly p1 = ps, q1 = qs;
  bool has_common = g.size() >= 2;
  if (has_common) {
    p1 = divide_exact(ps, g);
    q1 = divide_exact(qs, g);
  }
  if (!has_common) return cmp_distinct(p1, q1);

  // largest(p) = max(L(g), L(p1)); g, p1, q1 pairwise coprime square-free.
  RootOrder g_vs_p1 = cmp_distinct(g, p1);
  RootOrder g_vs_q1 = cmp_distinct(g, q1);
  bool p_top_is_g = (g_vs_p1 != RootOrder::Less);
  bool q_top_is_g = (g_vs_q1 != RootOrder::Less);
  if (p_top_is_g && q_top_is_g) return RootOrder::Equal;
  if (p_top_is_g) return RootOrder::Less;     // q's top beats g >= p's top
  if (q_top_is_g) return RootOrder::Greater;  // p's top beats g >= q's top
  return cmp_distinct(p1, q1);
}

}  // namespace spectramin
