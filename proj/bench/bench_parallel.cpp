// Serial-vs-OpenMP comparison for the three parallel kernels: the sweep loop,
// the brute-force adversary search, and greedy candidate evaluation.

#include <benchmark/benchmark.h>

#include "minflood/adversary.hpp"
#include "minflood/oracle.hpp"
#include "minflood/scenario.hpp"
#include "minflood/sweep.hpp"

namespace {

minflood::SweepSpec sweep_spec() {
  return minflood::load_sweep_text(
      "n = 8\np = 2\nprotocol = p_agreement\nadversary = greedy_min_phi\n"
      "sweep.n = 6..14\nsweep.trials = 4\n");
}

void BM_SweepSerial(benchmark::State& state) {
  const minflood::SweepSpec spec = sweep_spec();
  for (auto _ : state)
    benchmark::DoNotOptimize(minflood::run_sweep(spec, minflood::SweepMode::Serial));
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) {
  const minflood::SweepSpec spec = sweep_spec();
  for (auto _ : state)
    benchmark::DoNotOptimize(minflood::run_sweep(spec, minflood::SweepMode::Parallel));
}
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);

void BM_OracleSerial(benchmark::State& state) {
  const std::vector<minflood::Value> inputs{1, 2, 3, 4};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        minflood::brute_force_worst_rounds_serial(4, static_cast<int>(state.range(0)), inputs));
}
BENCHMARK(BM_OracleSerial)->Arg(1)->Arg(2);

void BM_OracleParallel(benchmark::State& state) {
  const std::vector<minflood::Value> inputs{1, 2, 3, 4};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        minflood::brute_force_worst_rounds(4, static_cast<int>(state.range(0)), inputs));
}
BENCHMARK(BM_OracleParallel)->Arg(1)->Arg(2);

std::vector<minflood::ProcessState> greedy_states(int n) {
  std::vector<minflood::ProcessState> states;
  for (int i = 0; i < n; ++i) states.push_back(minflood::initial_state(i));
  return states;
}

void BM_GreedySerial(benchmark::State& state) {
  const auto states = greedy_states(24);
  for (auto _ : state) {
    minflood::Rng rng(1);
    benchmark::DoNotOptimize(
        minflood::greedy_min_phi_topology_serial(states, 3, 3, 2000, rng));
  }
}
BENCHMARK(BM_GreedySerial)->Unit(benchmark::kMillisecond);

void BM_GreedyParallel(benchmark::State& state) {
  const auto states = greedy_states(24);
  for (auto _ : state) {
    minflood::Rng rng(1);
    benchmark::DoNotOptimize(minflood::greedy_min_phi_topology(states, 3, 3, 2000, rng));
  }
}
BENCHMARK(BM_GreedyParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
