#include <benchmark/benchmark.h>

#include "brauer/diagram.hpp"

using namespace brauer;

static void BM_Compose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ds = enumerate_diagrams(n, n);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& a = ds[i % ds.size()];
    const auto& b = ds[(7 * i + 3) % ds.size()];
    benchmark::DoNotOptimize(compose(b, a));
    ++i;
  }
}
BENCHMARK(BM_Compose)->DenseRange(2, 5);

static void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_diagrams(n, n));
}
BENCHMARK(BM_Enumerate)->DenseRange(2, 5);
