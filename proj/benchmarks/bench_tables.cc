#include <benchmark/benchmark.h>

#include "bsppcc/mc_tables.hpp"

namespace {

bsppcc::SimConfig make_config(std::size_t n, std::uint64_t iterations) {
  bsppcc::SimConfig config;
  config.n = n;
  config.iterations = iterations;
  config.seed = 5551212;
  config.levels = {0.005, 0.01, 0.025, 0.05, 0.10, 0.25, 0.50};
  return config;
}

void BM_SimulateNullR(benchmark::State& state) {
  const auto config = make_config(state.range(0), 20000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bsppcc::simulate_null_r(config));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(config.iterations));
}
BENCHMARK(BM_SimulateNullR)->Arg(10)->Arg(46)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_CriticalRow(benchmark::State& state) {
  const auto config = make_config(46, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bsppcc::critical_row(config));
  }
}
BENCHMARK(BM_CriticalRow)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_ReferenceLookup(benchmark::State& state) {
  const auto& table = bsppcc::reference_table();
  for (auto _ : state) {
    benchmark::DoNotOptimize(table.rows().at(46)[4]);
  }
}
BENCHMARK(BM_ReferenceLookup);

}  // namespace
