#include <benchmark/benchmark.h>

#include "brauer/elements.hpp"

using namespace brauer;

static void BM_SigmaSquare(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const RationalField qq;
  const auto s = sigma(qq, mpq_class(-4), -1, r);
  for (auto _ : state) benchmark::DoNotOptimize(s * s);
}
BENCHMARK(BM_SigmaSquare)->DenseRange(2, 4);

static void BM_Phi(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(phi(n));
}
BENCHMARK(BM_Phi)->DenseRange(1, 3);
