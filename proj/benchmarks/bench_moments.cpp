#include <benchmark/benchmark.h>

#include "colourlab/moments.hpp"
#include "colourlab/overlap.hpp"

using namespace colourlab;

namespace {

void BM_FirstMomentTotal(benchmark::State& state) {
  const auto p = ModelParams::from_degree(static_cast<int>(state.range(0)), 2.0, 3);
  for (auto _ : state) benchmark::DoNotOptimize(first_moment_total_log(p));
}
BENCHMARK(BM_FirstMomentTotal)->Arg(300)->Arg(1000)->Arg(3000);

void BM_BalancedFirstMoment(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = ModelParams::from_degree(n, 2.0, 3);
  for (auto _ : state) benchmark::DoNotOptimize(balanced_first_moment_log(p, std::log(static_cast<double>(n))));
}
BENCHMARK(BM_BalancedFirstMoment)->Arg(2000)->Arg(20000);

void BM_SscSeries(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ssc_series(3.9, 3));
}
BENCHMARK(BM_SscSeries);

void BM_MaximizeF(benchmark::State& state) {
  MaximizeOptions o;
  o.starts = 8;
  for (auto _ : state) benchmark::DoNotOptimize(maximize_f(2.0, static_cast<int>(state.range(0)), OverlapDomain::balanced, o));
}
BENCHMARK(BM_MaximizeF)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_LatticeSum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gaussian_lattice_sum(hessian_H(3), 40, 4.5));
}
BENCHMARK(BM_LatticeSum)->Unit(benchmark::kMillisecond);

}  // namespace
