#include <benchmark/benchmark.h>

#include <vector>

#include "bsppcc/bs_dist.hpp"
#include "bsppcc/normal.hpp"
#include "bsppcc/plot_corr.hpp"
#include "bsppcc/rng.hpp"
#include "bsppcc/sample.hpp"

namespace {

bsppcc::Sample make_sample(std::size_t n) {
  bsppcc::Philox rng(918273645);
  return bsppcc::bs_sample(n, bsppcc::BsParams(1.0, 1.0), rng);
}

void BM_NormalQuantile(benchmark::State& state) {
  double p = 1e-6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bsppcc::std_normal_quantile(p));
    p += 1e-7;
    if (p >= 1.0) p = 1e-6;
  }
}
BENCHMARK(BM_NormalQuantile);

void BM_BsQuantile(benchmark::State& state) {
  const bsppcc::BsParams params(0.8, 2.0);
  double p = 1e-6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bsppcc::bs_quantile(p, params));
    p += 1e-7;
    if (p >= 1.0) p = 1e-6;
  }
}
BENCHMARK(BM_BsQuantile);

void BM_PlotStatistic(benchmark::State& state) {
  const bsppcc::Sample sample = make_sample(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bsppcc::bs_plot_statistic(sample));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PlotStatistic)->Range(8, 8192)->Complexity(benchmark::oNLogN);

void BM_Linearize(benchmark::State& state) {
  const bsppcc::Sample sample = make_sample(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bsppcc::linearize(sample));
  }
}
BENCHMARK(BM_Linearize)->Range(8, 8192);

}  // namespace

BENCHMARK_MAIN();
