// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include <benchmark/benchmark.h>

#include "ncic/channel.hpp"
#include "ncic/gdof.hpp"
#include "ncic/polytope.hpp"
#include "ncic/rates.hpp"

namespace {

void BM_ProjectJointSystem(benchmark::State& state) {
  const bool feedback = state.range(0) != 0;
  const ncic::TermBounds bounds =
      ncic::term_bounds_at(std::pow(10.0, 10.0), std::pow(10.0, 7.0), 5);
  const ncic::IneqSystem system = ncic::prefm_system(bounds, feedback, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ncic::project(system, "R1", "R2"));
  }
}
BENCHMARK(BM_ProjectJointSystem)->Arg(0)->Arg(1);

void BM_RemoveRedundant(benchmark::State& state) {
  const ncic::Region2D region = ncic::region(ncic::SchemeId::TrainNoFb, 0.6, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ncic::remove_redundant(region));
  }
}
BENCHMARK(BM_RemoveRedundant);

void BM_ExpIntegralE1(benchmark::State& state) {
  const double x = state.range(0) / 100.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ncic::exp_integral_e1(x));
  }
}
BENCHMARK(BM_ExpIntegralE1)->Arg(5)->Arg(90)->Arg(500)->Arg(5000);

void BM_ExpectedLogMc(benchmark::State& state) {
  const ncic::ExpectedLogSpec spec{2.0, {{1.0, 3.0}}};
  const std::size_t samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ncic::expected_log_mc(spec, samples, 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ExpectedLogMc)->Arg(1 << 12)->Arg(1 << 16);

void BM_RateTrainingRs(benchmark::State& state) {
  const auto config = ncic::ChannelConfig::from_db(16.0, 1.0, 5, 0.1);
  const std::size_t samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ncic::rate_training_rs(config, samples, 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RateTrainingRs)->Arg(1 << 12)->Arg(1 << 16);

}  // namespace

BENCHMARK_MAIN();
