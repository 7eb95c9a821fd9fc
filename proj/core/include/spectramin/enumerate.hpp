#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "spectramin/graph.hpp"

namespace spectramin {

inline constexpr int kEnumMaxN = 10;

/// One branch of the generation tree: a partially built graph that workers
/// can extend independently.
struct EnumSeed {
  int k = 0;
  long e = 0;
  std::array<std::uint16_t, kEnumMaxN> rows{};
};

/// Plan for streaming all connected (n,e)-graphs up to isomorphism.
/// Generation runs by canonical augmentation (one new vertex per level,
/// accepted only when it lands in the orbit of the canonical deletion
/// vertex). Dense targets (e > C(n,2)/2) are generated on complements.
struct EnumPlan {
  int n = 0;
  long e = 0;
  bool by_complement = false;
  long gen_e = 0;  // edge target actually generated
  std::vector<EnumSeed> seeds;
};

/// Throws std::invalid_argument when n > 10 or e outside [n-1, C(n,2)].
EnumPlan plan_enumeration(int n, long e);

/// Streams the connected graphs of one seed, in deterministic order.
void run_seed(const EnumPlan& plan, int seed_index, const std::function<void(const Graph&)>& fn);

/// Full deterministic stream: seeds in order, each seed's graphs in order.
void enumerate_connected(int n, long e, const std::function<void(const Graph&)>& fn);

long long count_connected(int n, long e, int workers = 1);

/// Independent small-n oracle: every labeled graph with the given edge
/// count (via Gosper iteration over edge masks, on complements when those
/// are sparser), filtered for connectivity and bucketed by canonical form.
long long count_connected_by_filter(int n, long e);

}  // namespace spectramin
