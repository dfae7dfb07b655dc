// Serial reference against the OpenMP row kernel on the same grids.
#include <benchmark/benchmark.h>

#include "gammacheck/scan.hpp"

using namespace gammacheck;

namespace {

ScanConfig residual_grid(double step) {
  ScanConfig cfg;
  cfg.s_start = 1.1;
  cfg.s_end = 5.1;
  cfg.s_step = step;
  return cfg;
}

ScanConfig leibniz_grid() {
  ScanConfig cfg;
  cfg.s_start = 1.5;
  cfg.s_end = 6.0;
  cfg.s_step = 0.25;
  return cfg;
}

void BM_residual(benchmark::State& state, Execution mode) {
  const ScanConfig cfg = residual_grid(1.0 / static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(scan_residual(cfg, mode));
  state.counters["rows"] = static_cast<double>(cfg.grid().size());
}

void BM_leibniz(benchmark::State& state, Execution mode) {
  const ScanConfig cfg = leibniz_grid();
  for (auto _ : state) benchmark::DoNotOptimize(scan_leibniz(cfg, mode));
}

}  // namespace

BENCHMARK_CAPTURE(BM_residual, serial, Execution::serial)->Arg(4)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_residual, parallel, Execution::parallel)->Arg(4)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_leibniz, serial, Execution::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_leibniz, parallel, Execution::parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
