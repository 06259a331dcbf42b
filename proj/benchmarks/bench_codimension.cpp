#include "superpi/engine.hpp"
#include "superpi/theorems.hpp"

#include <benchmark/benchmark.h>

using namespace superpi;

static void BM_CodimensionMatrices(benchmark::State& state) {
  const auto a = matrix_algebra(2);
  const Multidegree n{static_cast<int>(state.range(0)), 0, 0, 0};
  for (auto _ : state) benchmark::DoNotOptimize(codimension(a, n));
}
BENCHMARK(BM_CodimensionMatrices)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_CocharacterGrassmann(benchmark::State& state) {
  const auto a = grassmann_trunc(4);
  const Multidegree n{2, 0, 0, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(cocharacter(a, n));
}
BENCHMARK(BM_CocharacterGrassmann)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_CocharacterJobs(benchmark::State& state) {
  const auto a = matrix_super(1);
  EngineOptions opts;
  opts.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cocharacter(a, {1, 1, 1, 1}, opts));
}
BENCHMARK(BM_CocharacterJobs)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_HookReport(benchmark::State& state) {
  const auto g = grassmann2();
  for (auto _ : state) benchmark::DoNotOptimize(hook_report(g, 3));
}
BENCHMARK(BM_HookReport)->Unit(benchmark::kMillisecond);

static void BM_AmitsurCheck(benchmark::State& state) {
  const auto g = grassmann2();
  const QuadHookSpec rank{{HookSpec{1, 0}, {0, 0}, {0, 0}, {0, 1}}};
  for (auto _ : state) benchmark::DoNotOptimize(amitsur_check(g, rank));
}
BENCHMARK(BM_AmitsurCheck)->Unit(benchmark::kMillisecond);
