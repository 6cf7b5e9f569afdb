#include <benchmark/benchmark.h>

#include "colourlab/cycles.hpp"
#include "colourlab/models.hpp"

using namespace colourlab;

namespace {

void BM_SampleMultigraph(benchmark::State& state) {
  Rng rng(RandomSource{1, 0});
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_gnm_multigraph(n, n, rng));
}
BENCHMARK(BM_SampleMultigraph)->Arg(1000)->Arg(10000);

void BM_SampleSimple(benchmark::State& state) {
  Rng rng(RandomSource{1, 0});
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_gnm_simple(n, n, rng));
}
BENCHMARK(BM_SampleSimple)->Arg(1000)->Arg(10000);

void BM_Census(benchmark::State& state) {
  Rng rng(RandomSource{2, 0});
  const int L = static_cast<int>(state.range(0));
  const auto g = sample_gnm_multigraph(1000, 1000, rng);
  for (auto _ : state) benchmark::DoNotOptimize(cycle_census(g, L));
}
BENCHMARK(BM_Census)->Arg(3)->Arg(6)->Arg(12);

}  // namespace
