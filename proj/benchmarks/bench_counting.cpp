#include <benchmark/benchmark.h>

#include "colourlab/colouring.hpp"
#include "colourlab/models.hpp"
#include "colourlab/moments.hpp"

using namespace colourlab;

namespace {

std::vector<Graph> graphs(int n, double d, int count) {
  std::vector<Graph> out;
  Rng rng(RandomSource{42, static_cast<std::uint64_t>(n)});
  for (int i = 0; i < count; ++i) out.push_back(sample_gnm_multigraph(n, edges_for_degree(n, d), rng));
  return out;
}

void BM_CountExact(benchmark::State& state) {
  const auto gs = graphs(static_cast<int>(state.range(0)), 1.0, 16);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(count_colourings(gs[i++ % gs.size()], 3));
}
BENCHMARK(BM_CountExact)->Arg(30)->Arg(60)->Arg(120);

void BM_CountFastPath(benchmark::State& state) {
  const auto gs = graphs(static_cast<int>(state.range(0)), 1.0, 16);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(count_colourings_fp(gs[i++ % gs.size()], 3));
}
BENCHMARK(BM_CountFastPath)->Arg(30)->Arg(60)->Arg(120);

void BM_CountBalancedFastPath(benchmark::State& state) {
  const auto gs = graphs(static_cast<int>(state.range(0)), 1.0, 16);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(count_balanced_colourings_fp(gs[i++ % gs.size()], 3, {1.0}));
}
BENCHMARK(BM_CountBalancedFastPath)->Arg(30)->Arg(60)->Arg(120);

void BM_UniformColouring(benchmark::State& state) {
  const auto gs = graphs(static_cast<int>(state.range(0)), 1.0, 16);
  Rng rng(RandomSource{1, 0});
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_uniform_colouring(gs[i++ % gs.size()], 3, rng));
}
BENCHMARK(BM_UniformColouring)->Arg(20)->Arg(40);

}  // namespace
