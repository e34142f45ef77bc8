#include <benchmark/benchmark.h>

#include <random>

#include "sqfree/betti.hpp"
#include "sqfree/generator.hpp"
#include "sqfree/linalg.hpp"
#include "sqfree/local_cohomology.hpp"
#include "sqfree/matrix_file.hpp"

using namespace sqfree;

namespace {

SquarefreeModule instance(int n) { return SquarefreeModule::canonical(to_matrix(generate_test_matrix(n, 3, 4, 7))); }

void BM_BettiTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    // fresh module each round so the reduction cache starts cold
    const auto m = instance(n);
    benchmark::DoNotOptimize(betti_table(m));
  }
}
BENCHMARK(BM_BettiTable)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_PatternSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto m = instance(n);
    benchmark::DoNotOptimize(pattern_sweep(m, false));
  }
}
BENCHMARK(BM_PatternSweep)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_Echelon(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> entry(-9, 9);
  RationalMatrix m(size, size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) m(r, c) = Rational(entry(rng), 1 + (r + c) % 4);
  for (auto _ : state) benchmark::DoNotOptimize(echelonize(m));
}
BENCHMARK(BM_Echelon)->RangeMultiplier(2)->Range(8, 64);

}  // namespace

BENCHMARK_MAIN();
