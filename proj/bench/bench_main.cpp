#include <benchmark/benchmark.h>

#include "chibind/extremal.hpp"
#include "chibind/harness.hpp"

using namespace chibind;

namespace {

FuzzConfig campaign() {
  FuzzConfig cfg;
  cfg.sampler.n = 8;
  cfg.n_max = 12;
  cfg.sampler.seed = 20240601;
  cfg.probs = {{1, 4}, {1, 3}, {1, 2}, {2, 3}, {3, 4}};
  return cfg;
}

void BM_fuzz_serial(benchmark::State& state) {
  const auto cfg = campaign();
  for (auto _ : state) benchmark::DoNotOptimize(fuzz_bound(cfg, static_cast<int>(state.range(0))));
}

void BM_fuzz_parallel(benchmark::State& state) {
  const auto cfg = campaign();
  for (auto _ : state) benchmark::DoNotOptimize(fuzz_bound_parallel(cfg, static_cast<int>(state.range(0))));
}

void BM_tightness_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tightness_report(static_cast<int>(state.range(0))));
}

void BM_tightness_parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tightness_report_parallel(static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_fuzz_serial)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fuzz_parallel)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_tightness_serial)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_tightness_parallel)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
