#include "superpi/symgroup.hpp"

#include <benchmark/benchmark.h>

using namespace superpi;

static void BM_CharacterTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto parts = partitions_of(n);
  const auto classes = conjugacy_classes(n);
  for (auto _ : state) {
    std::int64_t acc = 0;
    for (const auto& l : parts)
      for (const auto& c : classes) acc += character_value(l, c.type);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_CharacterTable)->DenseRange(4, 12, 4);

static void BM_EssentialIdempotent(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto t = Tableau::row_reading(Partition({(n + 1) / 2, n / 2}));
  for (auto _ : state) benchmark::DoNotOptimize(essential_idempotent(t));
}
BENCHMARK(BM_EssentialIdempotent)->DenseRange(2, 8, 2);

static void BM_IdempotentSquare(benchmark::State& state) {
  const auto e = essential_idempotent(Tableau::row_reading(Partition({2, 2, 1})));
  for (auto _ : state) benchmark::DoNotOptimize(e * e);
}
BENCHMARK(BM_IdempotentSquare);
