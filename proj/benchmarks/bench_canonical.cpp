#include <benchmark/benchmark.h>

#include <random>

#include "spectramin/canonical.hpp"
#include "spectramin/constructions.hpp"

namespace {

using namespace spectramin;

std::vector<Graph> sample_graphs(int n, int count) {
  std::mt19937 rng(42);
  std::vector<Graph> out;
  while (static_cast<int>(out.size()) < count) {
    Graph g = Graph::empty(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() & 1) g = g.with_edge(i, j);
    out.push_back(g);
  }
  return out;
}

void BM_CanonicalFormRandom(benchmark::State& state) {
  auto graphs = sample_graphs(static_cast<int>(state.range(0)), 256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(graphs[i]));
    i = (i + 1) % graphs.size();
  }
}
BENCHMARK(BM_CanonicalFormRandom)->Arg(8)->Arg(10)->Arg(16);

void BM_CanonicalFormSymmetric(benchmark::State& state) {
  Graph g = complete_bipartite(8, 8);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormSymmetric);

}  // namespace

BENCHMARK_MAIN();
