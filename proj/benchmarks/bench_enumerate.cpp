#include <benchmark/benchmark.h>

#include "spectramin/enumerate.hpp"
#include "spectramin/minimize.hpp"

namespace {

using namespace spectramin;

void BM_EnumerateConnected(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  long e = state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(count_connected(n, e));
}
BENCHMARK(BM_EnumerateConnected)->Args({7, 10})->Args({8, 14})->Args({8, 21})->Args({9, 12});

void BM_FilterOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_connected_by_filter(7, 10));
}
BENCHMARK(BM_FilterOracle);

void BM_Minimizers(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  long e = state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(minimizers(n, e).rho_min);
}
BENCHMARK(BM_Minimizers)->Args({7, 8})->Args({8, 15})->Args({8, 17});

}  // namespace
