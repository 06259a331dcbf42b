#include "superpi/linalg.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace superpi;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  Matrix m(rows, Vector(cols));
  for (auto& r : m)
    for (auto& x : r) {
      x = Rational(num(rng), den(rng));
      x.canonicalize();
    }
  return m;
}

} // namespace

static void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(8, 64);

static void BM_EchelonInsert(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(2 * n, n, 2);
  for (auto _ : state) {
    EchelonBasis b(n);
    for (const auto& r : m)
      if (!b.full()) b.insert(r);
    benchmark::DoNotOptimize(b.rank());
  }
}
BENCHMARK(BM_EchelonInsert)->RangeMultiplier(2)->Range(8, 64);
