#include "flop/ainfty.hpp"
#include "flop/arcs.hpp"
#include "flop/homalg.hpp"
#include "flop/stability.hpp"
#include "flop/truncated.hpp"

#include <benchmark/benchmark.h>

using namespace flop;

static void BM_TruncatedAlgebra(benchmark::State& state) {
  for (auto _ : state) {
    TruncatedAlgebra a(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(a.total_dim());
  }
}
BENCHMARK(BM_TruncatedAlgebra)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_Stasheff(benchmark::State& state) {
  const auto t = AInftyTable::conifold();
  for (auto _ : state) benchmark::DoNotOptimize(stasheff_check(t, static_cast<int>(state.range(0))).ok);
}
BENCHMARK(BM_Stasheff)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_IsStable(benchmark::State& state) {
  const StabilityParams p{CQ(-1, 2), CQ(1, 1)};
  const auto r = v_plus(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_stable(r, p).kind);
}
BENCHMARK(BM_IsStable)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_IsoCheck(benchmark::State& state) {
  const auto a = v_plus(4), b = psi_sphere(4).rep;
  for (auto _ : state) benchmark::DoNotOptimize(iso_check(a, b));
}
BENCHMARK(BM_IsoCheck)->Unit(benchmark::kMillisecond);

static void BM_ArcFlop(benchmark::State& state) {
  const SceneConfig cfg;
  const auto s = catalog_arc("S", static_cast<int>(state.range(0)), cfg);
  for (auto _ : state) benchmark::DoNotOptimize(flop_map(s, cfg).pts.size());
}
BENCHMARK(BM_ArcFlop)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
