#include <benchmark/benchmark.h>

#include <limits>

#include "slabshift/electrostatics.hpp"
#include "slabshift/modes.hpp"
#include "slabshift/reflection.hpp"
#include "slabshift/shift.hpp"

using namespace slabshift;

static void BM_RTildePair(benchmark::State& state) {
  double s = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rtilde_pair(s, 0.37, 1.3, 2.0));
    s += 1e-9;
  }
}
BENCHMARK(BM_RTildePair);

static void BM_WPair(benchmark::State& state) {
  const double zeta = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(w_pair(ReducedParams(zeta, 1.0, 2.0)));
}
BENCHMARK(BM_WPair)->Arg(1)->Arg(10)->Arg(80)->Arg(500)->Unit(benchmark::kMicrosecond);

static void BM_WPairHalfSpace(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(w_pair(ReducedParams(1.0, std::numeric_limits<double>::infinity(), 2.0)));
  }
}
BENCHMARK(BM_WPairHalfSpace)->Unit(benchmark::kMicrosecond);

static void BM_ImageSeriesKernel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(image_series_kernel(1.0, 0.01, 0.99));
}
BENCHMARK(BM_ImageSeriesKernel);

static void BM_FindTrappedModes(benchmark::State& state) {
  const Slab slab(2.0, 1.0);
  const double k_par = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(find_all_trapped_modes(k_par, slab));
}
BENCHMARK(BM_FindTrappedModes)->Arg(1)->Arg(10)->Arg(100)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
