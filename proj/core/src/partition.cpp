#include "spectramin/partition.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace spectramin {

using boost::multiprecision::cpp_rational;

Partition Partition::of(const Graph& g, std::vector<std::vector<int>> blocks) {
  int n = g.order();
  std::uint64_t seen = 0;
  for (const auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("partition: empty block");
    for (int v : b) {
      if (v < 0 || v >= n) throw std::invalid_argument("partition: vertex out of range");
      if ((seen >> v) & 1) throw std::invalid_argument("partition: duplicate vertex");
      seen |= 1ull << v;
    }
  }
  std::uint64_t all = (n == 64) ? ~0ull : ((1ull << n) - 1);
  if (seen != all) throw std::invalid_argument("partition: blocks do not cover V");
  Partition p;
  p.blocks = std::move(blocks);
  return p;
}

Partition Partition::singletons(const Graph& g) {
  std::vector<std::vector<int>> b;
  for (int v = 0; v < g.order(); ++v) b.push_back({v});
  return of(g, std::move(b));
}

Partition Partition::whole(const Graph& g) {
  std::vector<int> b(g.order());
  for (int v = 0; v < g.order(); ++v) b[v] = v;
  return of(g, {b});
}

QuotientMatrix quotient_matrix(const Graph& g, const Partition& pi) {
  Partition::of(g, pi.blocks);  // revalidate against this graph
  int k = pi.size();
  QuotientMatrix q;
  q.k = k;
  q.entries.assign(k * k, 0.0);
  q.pair_counts.assign(k * k, 0);
  q.block_sizes.resize(k);
  q.equitable = true;

  std::vector<std::uint64_t> mask(k, 0);
  for (int i = 0; i < k; ++i) {
    q.block_sizes[i] = static_cast<int>(pi.blocks[i].size());
    for (int v : pi.blocks[i]) mask[i] |= 1ull << v;
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      long long total = 0;
      int first = -1;
      bool uniform = true;
      for (int v : pi.blocks[i]) {
        int c = __builtin_popcountll(g.neighbors(v) & mask[j]);
        if (first < 0)
          first = c;
        else if (c != first)
          uniform = false;
        total += c;
      }
      q.pair_counts[i * k + j] = total;
      q.entries[i * k + j] = static_cast<double>(total) / q.block_sizes[i];
      if (!uniform) q.equitable = false;
    }
  }
  return q;
}

namespace {

// Exact determinant by fraction-free (Bareiss) elimination.
BigInt bareiss_det(std::vector<BigInt> m, int k) {
  if (k == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (int i = 0; i < k - 1; ++i) {
    if (m[i * k + i] == 0) {
      int piv = -1;
      for (int r = i + 1; r < k; ++r)
        if (m[r * k + i] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0;
      for (int c = 0; c < k; ++c) std::swap(m[i * k + c], m[piv * k + c]);
      sign = -sign;
    }
    for (int r = i + 1; r < k; ++r) {
      for (int c = i + 1; c < k; ++c)
        m[r * k + c] = (m[r * k + c] * m[i * k + i] - m[r * k + i] * m[i * k + c]) / prev;
      m[r * k + i] = 0;
    }
    prev = m[i * k + i];
  }
  return sign * m[(k - 1) * k + (k - 1)];
}

}  // namespace

IntPoly QuotientMatrix::scaled_char_poly() const {
  // Interpolate det(x D - C), degree k, at x = 0..k.
  std::vector<BigInt> values;
  for (int t = 0; t <= k; ++t) {
    std::vector<BigInt> m(k * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        m[i * k + j] = -BigInt(pair_counts[i * k + j]);
        if (i == j) m[i * k + j] += BigInt(t) * block_sizes[i];
      }
    values.push_back(bareiss_det(std::move(m), k));
  }
  // Lagrange interpolation over exact rationals
  std::vector<cpp_rational> coeffs(k + 1, 0);
  for (int t = 0; t <= k; ++t) {
    // basis polynomial prod_{j != t} (x - j) / (t - j)
    std::vector<cpp_rational> basis{1};
    cpp_rational denom = 1;
    for (int j = 0; j <= k; ++j) {
      if (j == t) continue;
      std::vector<cpp_rational> next(basis.size() + 1, 0);
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * j;
      }
      basis = std::move(next);
      denom *= (t - j);
    }
    cpp_rational w = cpp_rational(values[t]) / denom;
    for (std::size_t d = 0; d < basis.size(); ++d) coeffs[d] += basis[d] * w;
  }
  IntPoly out(k + 1);
  for (int d = 0; d <= k; ++d) {
    if (boost::multiprecision::denominator(coeffs[d]) != 1)
      throw std::logic_error("scaled_char_poly: non-integer coefficient");
    out[d] = boost::multiprecision::numerator(coeffs[d]);
  }
  return out;
}

double quotient_spectral_radius(const QuotientMatrix& q) {
  for (long long c : q.pair_counts)
    if (c < 0) throw std::invalid_argument("quotient_spectral_radius: negative entry");
  return largest_real_root(q.scaled_char_poly());
}

IntPoly char_poly_matrix(const std::vector<BigInt>& a, int k) {
  // Faddeev-LeVerrier over exact integers.
  if (static_cast<int>(a.size()) != k * k) throw std::invalid_argument("char_poly_matrix: bad size");
  IntPoly c(k + 1, 0);
  c[k] = 1;
  if (k == 0) return c;
  std::vector<BigInt> M = a, next(k * k);
  BigInt tr = 0;
  for (int i = 0; i < k; ++i) tr += M[i * k + i];
  c[k - 1] = -tr;
  for (int step = 2; step <= k; ++step) {
    for (int i = 0; i < k; ++i) M[i * k + i] += c[k - step + 1];
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        BigInt s = 0;
        for (int t = 0; t < k; ++t) s += a[i * k + t] * M[t * k + j];
        next[i * k + j] = s;
      }
    M.swap(next);
    tr = 0;
    for (int i = 0; i < k; ++i) tr += M[i * k + i];
    c[k - step] = -tr / step;
  }
  return c;
}

}  // namespace spectramin
