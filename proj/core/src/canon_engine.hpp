#pragma once

// Internal canonical-labeling engine shared by canonical.cpp and
// enumerate.cpp. Not installed.

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

namespace spectramin::detail {

inline constexpr int kCanonMaxN = 16;

inline void code_set_bits(std::array<std::uint64_t, 2>& w, int off, int len, std::uint64_t val) {
  for (int i = 0; i < len; ++i) {
    int b = off + i;
    std::uint64_t mask = 1ull << (63 - (b & 63));
    if ((val >> (len - 1 - i)) & 1)
      w[b >> 6] |= mask;
    else
      w[b >> 6] &= ~mask;
  }
}

inline std::uint64_t code_get_bits(const std::array<std::uint64_t, 2>& w, int off, int len) {
  std::uint64_t v = 0;
  for (int i = 0; i < len; ++i) {
    int b = off + i;
    v = (v << 1) | ((w[b >> 6] >> (63 - (b & 63))) & 1);
  }
  return v;
}

// Branch-and-bound canonical labeling with individualization-refinement.
// The canonical code is the lexicographically least upper-triangle bit
// string (graph6 bit order) over all vertex orderings that respect
// iterated equitable refinement. That ordering family is an isomorphism
// invariant of the colored graph, so equal codes <=> isomorphic.
//
// When two leaves tie, the permutation discrepancy is an automorphism;
// the search records it, prunes equivalent siblings with it, and unwinds
// to the first moved level (the abandoned subtree mirrors an explored
// one, so the minimum cannot hide there).
struct CanonEngine {
  int n = 0;
  std::array<std::uint32_t, kCanonMaxN> adj{};
  std::array<int, kCanonMaxN> color0{};

  std::array<std::uint64_t, 2> best{};
  std::array<std::uint64_t, 2> cur{};
  bool have_best = false;
  std::array<int, kCanonMaxN> best_perm{};  // canonical position -> vertex
  std::array<int, kCanonMaxN> placed{};
  std::vector<std::array<int, kCanonMaxN>> autos;

  std::array<int, kCanonMaxN> stable_color{};  // root refinement classes

  static constexpr int kPlacedBase = kCanonMaxN;

  void refine(std::array<int, kCanonMaxN>& col) const {
    for (;;) {
      std::array<std::pair<int, std::uint32_t>, kCanonMaxN> classes{};
      int nc = 0;
      for (int v = 0; v < n; ++v) {
        int c = col[v];
        int idx = -1;
        for (int i = 0; i < nc; ++i)
          if (classes[i].first == c) {
            idx = i;
            break;
          }
        if (idx < 0) {
          classes[nc] = {c, 0};
          idx = nc++;
        }
        classes[idx].second |= (1u << v);
      }
      std::sort(classes.begin(), classes.begin() + nc);

      std::array<std::array<std::uint8_t, kCanonMaxN + 1>, kCanonMaxN> sig{};
      for (int v = 0; v < n; ++v) {
        sig[v][0] = static_cast<std::uint8_t>(col[v]);
        for (int i = 0; i < nc; ++i)
          sig[v][i + 1] = static_cast<std::uint8_t>(__builtin_popcount(adj[v] & classes[i].second));
      }
      std::array<int, kCanonMaxN> order{};
      for (int v = 0; v < n; ++v) order[v] = v;
      std::sort(order.begin(), order.begin() + n, [&](int a, int b) { return sig[a] < sig[b]; });
      std::array<int, kCanonMaxN> next{};
      int rank = -1;
      int newc = 0;
      for (int i = 0; i < n; ++i) {
        if (i == 0 || sig[order[i]] != sig[order[i - 1]]) ++rank;
        int v = order[i];
        next[v] = col[v] < kPlacedBase ? col[v] : kPlacedBase + rank;
      }
      {
        std::uint64_t seen = 0;
        for (int v = 0; v < n; ++v) {
          if (!((seen >> next[v]) & 1)) ++newc;
          seen |= 1ull << next[v];
        }
      }
      int oldc = 0;
      {
        std::uint64_t seen = 0;
        for (int v = 0; v < n; ++v) {
          if (!((seen >> col[v]) & 1)) ++oldc;
          seen |= 1ull << col[v];
        }
      }
      bool stable = (oldc == newc);
      col = next;
      if (stable) return;
    }
  }

  int search(int k, std::array<int, kCanonMaxN> col, bool tight) {
    if (k == n) {
      if (!have_best || !tight) {
        best = cur;
        best_perm = placed;
        have_best = true;
        return -1;
      }
      std::array<int, kCanonMaxN> a{};
      int first_moved = -1;
      for (int i = 0; i < n; ++i) {
        a[best_perm[i]] = placed[i];
        if (first_moved < 0 && best_perm[i] != placed[i]) first_moved = i;
      }
      if (first_moved < 0) return -1;
      if (autos.size() < 128) autos.push_back(a);
      return first_moved;
    }

    int target = 1 << 30;
    for (int v = 0; v < n; ++v)
      if (col[v] >= kPlacedBase) target = std::min(target, col[v]);
    std::uint32_t cand = 0;
    for (int v = 0; v < n; ++v)
      if (col[v] == target) cand |= (1u << v);

    std::uint32_t tried = 0;
    int off = k * (k - 1) / 2;
    while (cand) {
      int u = __builtin_ctz(cand);
      cand &= cand - 1;
      bool skip = false;
      for (const auto& a : autos) {
        bool fixes = true;
        for (int i = 0; i < k && fixes; ++i) fixes = (a[placed[i]] == placed[i]);
        if (fixes && ((tried >> a[u]) & 1)) {
          skip = true;
          break;
        }
      }
      tried |= (1u << u);
      if (skip) continue;

      std::uint64_t chunk = 0;
      for (int i = 0; i < k; ++i) chunk = (chunk << 1) | ((adj[u] >> placed[i]) & 1);
      bool child_tight = tight;
      if (have_best && tight) {
        std::uint64_t bchunk = code_get_bits(best, off, k);
        if (chunk > bchunk) continue;
        if (chunk < bchunk) child_tight = false;
      } else if (!have_best) {
        child_tight = false;
      }
      code_set_bits(cur, off, k, chunk);
      placed[k] = u;

      std::array<int, kCanonMaxN> col2 = col;
      col2[u] = k;
      if (k + 1 < n) refine(col2);

      int unwind = search(k + 1, col2, child_tight);
      if (unwind >= 0 && unwind < k) return unwind;
      if (have_best) tight = true;
    }
    return -1;
  }

  void run() {
    autos.clear();
    have_best = false;
    best = {0, 0};
    cur = {0, 0};
    std::array<int, kCanonMaxN> col{};
    for (int v = 0; v < n; ++v) col[v] = kPlacedBase + color0[v];
    refine(col);
    stable_color = col;
    search(0, col, true);
  }
};

// Exact orbit test via marked canonicalization (colors limited to {0,1}).
inline bool same_orbit_marked(const std::uint32_t* rows, int n, int u, int v) {
  if (u == v) return true;
  CanonEngine a, b;
  a.n = b.n = n;
  for (int i = 0; i < n; ++i) {
    a.adj[i] = b.adj[i] = rows[i];
    a.color0[i] = (i == u) ? 1 : 0;
    b.color0[i] = (i == v) ? 1 : 0;
  }
  a.run();
  b.run();
  return a.best == b.best;
}

}  // namespace spectramin::detail
