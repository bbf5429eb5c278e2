// Copyright 2026 The Spectrum Auction Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Serial reference vs OpenMP kernels, plus the three allocation policies at
// the population sizes the processing-time sweep uses.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <numeric>
#include <vector>

#include "spectrum/allocation.hpp"
#include "spectrum/experiments.hpp"
#include "spectrum/instances.hpp"
#include "spectrum/kernels.hpp"

namespace {

using spectrum::ExecutionPolicy;

std::vector<std::int64_t> ramp(std::size_t width) {
  std::vector<std::int64_t> row(width);
  std::iota(row.begin(), row.end(), std::int64_t{0});
  return row;
}

void BM_RelaxRowSerial(benchmark::State& state) {
  const auto prev = ramp(static_cast<std::size_t>(state.range(0)));
  std::vector<std::int64_t> next(prev.size());
  for (auto _ : state) {
    spectrum::relax_row_serial(prev, next, 7, 1000);
    benchmark::DoNotOptimize(next.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RelaxRowSerial)->RangeMultiplier(8)->Range(64, 1 << 21);

void BM_RelaxRowParallel(benchmark::State& state) {
  const auto prev = ramp(static_cast<std::size_t>(state.range(0)));
  std::vector<std::int64_t> next(prev.size());
  for (auto _ : state) {
    spectrum::relax_row_parallel(prev, next, 7, 1000);
    benchmark::DoNotOptimize(next.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RelaxRowParallel)->RangeMultiplier(8)->Range(64, 1 << 21);

void BM_DpValue(benchmark::State& state, ExecutionPolicy exec) {
  const auto bids = spectrum::gen_random_instance(
      7, 64, 50, spectrum::Money::from_cents(100000));
  const spectrum::ChannelPool pool{state.range(0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectrum::dp_value(bids, pool, exec));
  }
}
BENCHMARK_CAPTURE(BM_DpValue, serial, ExecutionPolicy::kSerial)
    ->RangeMultiplier(16)->Range(16, 1 << 20);
BENCHMARK_CAPTURE(BM_DpValue, parallel, ExecutionPolicy::kParallel)
    ->RangeMultiplier(16)->Range(16, 1 << 20);

void BM_SweepChannels(benchmark::State& state, ExecutionPolicy exec) {
  const auto bids = spectrum::gen_random_instance(
      11, 200, 40, spectrum::Money::from_cents(100000));
  std::vector<std::int64_t> ms;
  for (std::int64_t m = 1; m <= state.range(0); ++m) ms.push_back(m * 50);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectrum::sweep_channels(bids, ms, exec));
  }
}
BENCHMARK_CAPTURE(BM_SweepChannels, serial, ExecutionPolicy::kSerial)->Arg(10)->Arg(40);
BENCHMARK_CAPTURE(BM_SweepChannels, parallel, ExecutionPolicy::kParallel)->Arg(10)->Arg(40);

void BM_Policy(benchmark::State& state, spectrum::Policy policy) {
  const auto bids = spectrum::gen_random_instance(
      1, static_cast<std::size_t>(state.range(0)), 5,
      spectrum::Money::from_cents(50000));
  const spectrum::ChannelPool pool{5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectrum::allocate(policy, bids, pool));
  }
}
BENCHMARK_CAPTURE(BM_Policy, fifo, spectrum::Policy::kFifo)->DenseRange(1, 10, 3);
BENCHMARK_CAPTURE(BM_Policy, greedy, spectrum::Policy::kGreedySealed)->DenseRange(1, 10, 3);
BENCHMARK_CAPTURE(BM_Policy, dp, spectrum::Policy::kDpSealed)->DenseRange(1, 10, 3);

}  // namespace

BENCHMARK_MAIN();
