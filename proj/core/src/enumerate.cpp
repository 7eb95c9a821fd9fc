#include "spectramin/enumerate.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "canon_engine.hpp"

namespace spectramin {

namespace {

long choose2(long n) { return n * (n - 1) / 2; }

bool rows_connected(const std::uint16_t* rows, int n) {
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0, f = frontier;
    while (f) {
      int v = __builtin_ctz(f);
      f &= f - 1;
      next |= rows[v];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (n >= 32 ? ~0u : ((1u << n) - 1));
}

Graph rows_to_graph(const std::uint16_t* rows, int n) {
  std::array<std::uint64_t, kMaxVertices> wide{};
  for (int v = 0; v < n; ++v) wide[v] = rows[v];
  return Graph::from_rows(n, std::span<const std::uint64_t>(wide.data(), n));
}

// Canonical-augmentation acceptance: the newly added vertex w = k must lie
// in the automorphism orbit of the vertex at the last canonical position.
// Cheap rejects first (stable color mismatch), then the generator subgroup,
// then an exact marked canonicalization.
struct ChildCheck {
  detail::CanonEngine eng;

  // returns the canonical code word, or 0 in `ok` when rejected
  bool accept(const std::uint16_t* rows, int k1, std::uint64_t& code_out) {
    eng.n = k1;
    for (int v = 0; v < k1; ++v) {
      eng.adj[v] = rows[v];
      eng.color0[v] = 0;
    }
    eng.run();
    code_out = eng.best[0];
    int w = k1 - 1;
    int last = eng.best_perm[k1 - 1];
    if (w == last) return true;
    if (eng.stable_color[w] != eng.stable_color[last]) return false;
    // orbit closure of `last` under the discovered generators
    std::uint32_t orbit = 1u << last;
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& a : eng.autos) {
        std::uint32_t img = 0;
        for (int v = 0; v < k1; ++v)
          if ((orbit >> v) & 1) img |= 1u << a[v];
        if ((img | orbit) != orbit) {
          orbit |= img;
          grew = true;
        }
      }
      if ((orbit >> w) & 1) return true;
    }
    std::array<std::uint32_t, detail::kCanonMaxN> wide{};
    for (int v = 0; v < k1; ++v) wide[v] = rows[v];
    return detail::same_orbit_marked(wide.data(), k1, w, last);
  }
};

struct Generator {
  int n;
  long target;
  ChildCheck check;
  const std::function<void(const EnumSeed&)>* seed_sink = nullptr;
  int seed_level = 0;
  const std::function<void(const std::uint16_t*, int)>* leaf_sink = nullptr;

  void dfs(std::uint16_t* rows, int k, long e) {
    if (k == n) {
      if (e == target && leaf_sink) (*leaf_sink)(rows, n);
      return;
    }
    if (seed_sink && k == seed_level) {
      EnumSeed s;
      s.k = k;
      s.e = e;
      for (int v = 0; v < k; ++v) s.rows[v] = rows[v];
      (*seed_sink)(s);
      return;
    }
    long slack_after = choose2(n) - choose2(k + 1);
    std::vector<std::uint64_t> seen;
    std::uint16_t child[kEnumMaxN];
    for (std::uint32_t x = 0; x < (1u << k); ++x) {
      long ne = e + __builtin_popcount(x);
      if (ne > target || ne + slack_after < target) continue;
      for (int v = 0; v < k; ++v) child[v] = rows[v] | (((x >> v) & 1u) << k);
      child[k] = static_cast<std::uint16_t>(x);
      std::uint64_t code;
      if (!check.accept(child, k + 1, code)) continue;
      bool dup = false;
      for (std::uint64_t c : seen)
        if (c == code) {
          dup = true;
          break;
        }
      if (dup) continue;
      seen.push_back(code);
      dfs(child, k + 1, ne);
    }
  }
};

}  // namespace

EnumPlan plan_enumeration(int n, long e) {
  if (n < 1 || n > kEnumMaxN)
    throw std::invalid_argument("enumerate_connected: n must lie in [1, 10]");
  if (e < n - 1 || e > choose2(n))
    throw std::invalid_argument("enumerate_connected: no connected (n,e)-graphs (e out of range)");
  EnumPlan plan;
  plan.n = n;
  plan.e = e;
  plan.by_complement = e > choose2(n) / 2;
  plan.gen_e = plan.by_complement ? choose2(n) - e : e;

  if (n == 1) {
    plan.seeds.push_back(EnumSeed{1, 0, {}});
    return plan;
  }
  int seed_level = std::max(1, std::min(n - 3, 7));
  Generator gen;
  gen.n = n;
  gen.target = plan.gen_e;
  gen.seed_level = seed_level;
  std::function<void(const EnumSeed&)> sink = [&](const EnumSeed& s) { plan.seeds.push_back(s); };
  gen.seed_sink = &sink;
  std::uint16_t root[kEnumMaxN] = {0};
  gen.dfs(root, 1, 0);
  return plan;
}

void run_seed(const EnumPlan& plan, int seed_index, const std::function<void(const Graph&)>& fn) {
  const EnumSeed& s = plan.seeds.at(seed_index);
  Generator gen;
  gen.n = plan.n;
  gen.target = plan.gen_e;
  std::function<void(const std::uint16_t*, int)> leaf = [&](const std::uint16_t* rows, int n) {
    if (plan.by_complement) {
      std::uint16_t comp[kEnumMaxN];
      std::uint16_t all = static_cast<std::uint16_t>((1u << n) - 1);
      for (int v = 0; v < n; ++v) comp[v] = (~rows[v] & all) & ~(1u << v);
      if (!rows_connected(comp, n)) return;
      fn(rows_to_graph(comp, n));
    } else {
      if (!rows_connected(rows, n)) return;
      fn(rows_to_graph(rows, n));
    }
  };
  gen.leaf_sink = &leaf;
  std::uint16_t rows[kEnumMaxN];
  for (int v = 0; v < s.k; ++v) rows[v] = s.rows[v];
  gen.dfs(rows, s.k, s.e);
}

void enumerate_connected(int n, long e, const std::function<void(const Graph&)>& fn) {
  EnumPlan plan = plan_enumeration(n, e);
  for (int i = 0; i < static_cast<int>(plan.seeds.size()); ++i) run_seed(plan, i, fn);
}

long long count_connected(int n, long e, int workers) {
  EnumPlan plan = plan_enumeration(n, e);
  int nseeds = static_cast<int>(plan.seeds.size());
  if (workers <= 1 || nseeds <= 1) {
    long long total = 0;
    for (int i = 0; i < nseeds; ++i) run_seed(plan, i, [&](const Graph&) { ++total; });
    return total;
  }
  std::atomic<int> next{0};
  std::atomic<long long> total{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      long long local = 0;
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= nseeds) break;
        run_seed(plan, i, [&](const Graph&) { ++local; });
      }
      total += local;
    });
  for (auto& t : pool) t.join();
  return total.load();
}

long long count_connected_by_filter(int n, long e) {
  if (n < 1 || n > 8) throw std::invalid_argument("filter oracle: n <= 8 required");
  if (e < n - 1 || e > choose2(n)) return 0;
  long slots = choose2(n);
  bool by_complement = e > slots / 2;
  long target = by_complement ? slots - e : e;

  std::unordered_set<std::uint64_t> classes;
  detail::CanonEngine eng;
  auto consider = [&](std::uint64_t mask) {
    std::uint16_t rows[8] = {0};
    int bit = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++bit)
        if ((mask >> bit) & 1) {
          rows[i] |= 1u << j;
          rows[j] |= 1u << i;
        }
    if (by_complement) {
      std::uint16_t all = static_cast<std::uint16_t>((1u << n) - 1);
      for (int v = 0; v < n; ++v) rows[v] = (~rows[v] & all) & ~(1u << v);
    }
    if (!rows_connected(rows, n)) return;
    eng.n = n;
    for (int v = 0; v < n; ++v) {
      eng.adj[v] = rows[v];
      eng.color0[v] = 0;
    }
    eng.run();
    classes.insert(eng.best[0]);
  };

  if (target == 0) {
    consider(0);
  } else {
    // Gosper's hack over all `slots`-bit masks of popcount `target`
    std::uint64_t mask = (1ull << target) - 1;
    std::uint64_t limit = 1ull << slots;
    while (mask < limit) {
      consider(mask);
      std::uint64_t c = mask & -mask;
      std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  return static_cast<long long>(classes.size());
}

}  // namespace spectramin
