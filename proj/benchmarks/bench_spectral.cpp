#include <benchmark/benchmark.h>

#include "spectramin/charpoly.hpp"
#include "spectramin/constructions.hpp"
#include "spectramin/spectral.hpp"

namespace {

using namespace spectramin;

void BM_PowerIterationPath(benchmark::State& state) {
  Graph g = path(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(g).rho);
}
BENCHMARK(BM_PowerIterationPath)->Arg(10)->Arg(32)->Arg(64);

void BM_PowerIterationDense(benchmark::State& state) {
  Graph g = dense_minimizer(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(g).rho);
}
BENCHMARK(BM_PowerIterationDense)->Arg(10)->Arg(20)->Arg(40);

void BM_RhoEnclosureWithBail(benchmark::State& state) {
  Graph g = regular_graph(10, 4);
  for (auto _ : state) benchmark::DoNotOptimize(rho_enclosure(g, 1e-12, 3.0));
}
BENCHMARK(BM_RhoEnclosureWithBail);

void BM_ExactCharPoly(benchmark::State& state) {
  Graph g = regular_graph(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(g).coeffs.size());
}
BENCHMARK(BM_ExactCharPoly)->Arg(8)->Arg(12)->Arg(20);

void BM_LargestRealRootExact(benchmark::State& state) {
  IntPoly p = char_poly(b_graph(3, 2, 3)).coeffs;
  for (auto _ : state) benchmark::DoNotOptimize(largest_real_root(p));
}
BENCHMARK(BM_LargestRealRootExact);

}  // namespace
