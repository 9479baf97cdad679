#include <benchmark/benchmark.h>

#include "brauer/functor.hpp"

using namespace brauer;

static void BM_FunctorImage(benchmark::State& state) {
  const Functor<RationalField> fn(group_spec(Family::Orthogonal, 3), RationalField{});
  const auto ds = enumerate_diagrams(3, 3);
  const bool layered = state.range(0) != 0;
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& d = ds[i++ % ds.size()];
    benchmark::DoNotOptimize(layered ? fn.image_layered(d) : fn.image_direct(d));
  }
}
BENCHMARK(BM_FunctorImage)->Arg(0)->Arg(1);

static void BM_HomRank(benchmark::State& state) {
  const Functor<RationalField> fn(group_spec(Family::Symplectic, 2), RationalField{});
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hom_rank(fn, r, r));
}
BENCHMARK(BM_HomRank)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_HomRankModP(benchmark::State& state) {
  const Functor<PrimeField> fn(group_spec(Family::Symplectic, 2), PrimeField(5));
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hom_rank(fn, r, r));
}
BENCHMARK(BM_HomRankModP)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
