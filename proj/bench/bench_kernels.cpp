// Serial reference vs OpenMP kernels: the fraction/split sweep and Monte
// Carlo gain sampling.

#include <benchmark/benchmark.h>

#include "leocache/channel.hpp"
#include "leocache/optimizer.hpp"
#include "leocache/scenarios.hpp"

namespace {

using namespace leocache;

ScenarioConfig bench_config() {
  ScenarioConfig c;
  c.ch_ul.noncentrality = c.ch_dl.noncentrality = c.ch_terr.noncentrality = 10.0;
  c.lambda_per_m = 8.34e-5;
  c.pi_relay = 1.0;
  c.mu_storage = 1e-3;
  c.kappa = 0.005;
  return c;
}

SweepSpec fine_spec(Scenario s, long steps) {
  SweepSpec spec;
  spec.scenario = s;
  spec.fraction_grid = make_grid(0.0, 1.0, 1.0 / static_cast<double>(steps));
  spec.split_grid = make_grid(0.01, 0.99, 0.01);
  return spec;
}

template <SweepResult (*Kernel)(const CostModel&, const SweepSpec&)>
void BM_Sweep(benchmark::State& state) {
  const CostModel model(bench_config());
  const SweepSpec spec = fine_spec(Scenario::store_forward, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Kernel(model, spec));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(spec.fraction_grid.size()));
}

SweepResult serial_kernel(const CostModel& m, const SweepSpec& s) { return sweep_serial(m, s); }
SweepResult parallel_kernel(const CostModel& m, const SweepSpec& s) { return sweep(m, s); }

BENCHMARK_TEMPLATE(BM_Sweep, serial_kernel)->Arg(100)->Arg(1000)->Arg(10000)->UseRealTime();
BENCHMARK_TEMPLATE(BM_Sweep, parallel_kernel)->Arg(100)->Arg(1000)->Arg(10000)->UseRealTime();

template <bool Parallel>
void BM_SampleGains(benchmark::State& state) {
  ChannelParams p;
  p.noncentrality = 10.0;
  p.shadowing_sigma_db = 8.0;
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? sample_gains(p, n, 1) : sample_gains_serial(p, n, 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK_TEMPLATE(BM_SampleGains, false)->Arg(1 << 20)->Arg(1 << 23)->UseRealTime();
BENCHMARK_TEMPLATE(BM_SampleGains, true)->Arg(1 << 20)->Arg(1 << 23)->UseRealTime();

void BM_GainQuantile(benchmark::State& state) {
  ChannelParams p;
  p.noncentrality = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gain_quantile(p, 0.05));
}
BENCHMARK(BM_GainQuantile)->Arg(0)->Arg(10)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
