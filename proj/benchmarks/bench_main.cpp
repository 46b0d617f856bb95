#include <benchmark/benchmark.h>

#include "k3bps/kawaiyoshioka.hpp"
#include "k3bps/kkv.hpp"
#include "k3bps/lattice.hpp"
#include "k3bps/nlnumbers.hpp"
#include "k3bps/series.hpp"

using namespace k3bps;

static void BM_InfiniteProduct(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(infinite_product([](long) { return 24; }, state.range(0)));
}
BENCHMARK(BM_InfiniteProduct)->Arg(20)->Arg(60)->Arg(120);

static void BM_ExtractRTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(extract_r_table(state.range(0)));
}
BENCHMARK(BM_ExtractRTable)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_KYTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ky_table(state.range(0), state.range(0)));
}
BENCHMARK(BM_KYTable)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_ThetaQuartic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(theta_quartic(state.range(0)));
}
BENCHMARK(BM_ThetaQuartic)->Arg(40)->Arg(160)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_RefinedMultiplicity(benchmark::State& state) {
  const EvenLattice L = pi3_lattice();
  for (auto _ : state) benchmark::DoNotOptimize(nl_types(L, state.range(0), pi3_degrees(1, 8)));
}
// h < s keeps the extended discriminant positive
BENCHMARK(BM_RefinedMultiplicity)->Arg(1)->Arg(5)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
