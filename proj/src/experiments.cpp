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


#include "spectrum/experiments.hpp"

#include <exception>

#include "spectrum/allocation.hpp"
#include "spectrum/errors.hpp"
#include "spectrum/instances.hpp"
#include "spectrum/sim.hpp"

namespace spectrum {

Figure parse_figure(int number) {
  if (number < 6 || number > 9) {
    throw ConfigError("unknown figure " + std::to_string(number) +
                      " (expected 6, 7, 8 or 9)");
  }
  return static_cast<Figure>(number);
}

namespace {

// Runs body(i) for i in [0, count), in parallel unless told otherwise. The
// first exception thrown by any cell is rethrown after the loop.
template <class Body>
void for_each_cell(std::size_t count, ExecutionPolicy exec, Body&& body) {
  std::exception_ptr failure;
  const bool parallel = exec != ExecutionPolicy::kSerial && count > 1;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(spectrum_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::vector<ResultRow> sweep_channels(std::span<const Bid> dataset,
                                      std::span<const std::int64_t> m_values,
                                      ExecutionPolicy exec) {
  validate_bids(dataset);
  for (std::int64_t m : m_values) (void)ChannelPool{m};  // throws on m < 0

  const std::size_t per_policy = m_values.size();
  std::vector<ResultRow> rows(std::size(kAllPolicies) * per_policy);
  for_each_cell(rows.size(), exec, [&](std::size_t cell) {
    const Policy policy = kAllPolicies[cell / per_policy];
    const std::int64_t m = m_values[cell % per_policy];
    // Inner allocation stays serial; the parallelism is across cells.
    const AllocationOutcome out =
        policy == Policy::kDpSealed
            ? dp_allocate(dataset, ChannelPool{m}, ExecutionPolicy::kSerial)
            : allocate(policy, dataset, ChannelPool{m});
    ResultRow& row = rows[cell];
    row.policy = policy;
    row.param = m;
    row.satisfied = out.winners.size();
    row.total_gain = out.total_gain;
  });
  return rows;
}

std::vector<ResultRow> sweep_population(std::span<const std::size_t> nb_values,
                                        std::int64_t m,
                                        const InstanceGenerator& generator,
                                        std::size_t repeats) {
  if (repeats < 1) throw ConfigError("repeats must be >= 1");
  const ChannelPool pool{m};
  std::vector<std::vector<Bid>> instances;
  for (std::size_t nb : nb_values) {
    instances.push_back(generator(nb));
    validate_bids(instances.back());
  }
  std::vector<ResultRow> rows;
  for (Policy policy : kAllPolicies) {
    for (std::size_t k = 0; k < nb_values.size(); ++k) {
      const auto measured =
          measure_processing(instances[k], pool, policy, repeats);
      ResultRow row;
      row.policy = policy;
      row.param = static_cast<std::int64_t>(nb_values[k]);
      row.mean_processing = measured.mean;
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<ResultRow> sweep_interval(std::size_t nb,
                                      std::span<const std::int64_t> interval_seconds,
                                      SimDuration pu_launch_delay,
                                      std::uint64_t seed,
                                      ExecutionPolicy exec) {
  if (nb < 1) throw ConfigError("interval sweep needs nb >= 1");
  const std::size_t per_policy = interval_seconds.size();
  const std::size_t cells = std::size(kSealedPolicies) * per_policy;
  std::vector<std::vector<ResultRow>> blocks(cells);
  for_each_cell(cells, exec, [&](std::size_t cell) {
    SimConfig config;
    config.nb = nb;
    config.channels = 5;
    config.arrival_interval = std::chrono::seconds{interval_seconds[cell % per_policy]};
    config.pu_launch_delay = pu_launch_delay;
    config.policy = kSealedPolicies[cell / per_policy];
    config.demands = GeneratedDemands{seed, 5, Money::from_cents(50000)};
    const SimReport report = run_simulation(config);
    for (const auto& [su, response] : report.response_times) {
      ResultRow row;
      row.policy = config.policy;
      row.param = interval_seconds[cell % per_policy];
      row.su_id = su;
      row.response_time = response;
      blocks[cell].push_back(row);
    }
  });
  std::vector<ResultRow> rows;
  for (auto& block : blocks) rows.insert(rows.end(), block.begin(), block.end());
  return rows;
}

SweepSpec SweepSpec::defaults_for(Figure figure) {
  SweepSpec spec;
  spec.figure = figure;
  switch (figure) {
    case Figure::kSatisfiedVsChannels:
    case Figure::kGainVsChannels:
      for (std::int64_t m = 1; m <= 10; ++m) spec.channel_values.push_back(m);
      spec.dataset = figure == Figure::kSatisfiedVsChannels
                         ? satisfaction_dataset()
                         : gain_dataset();
      break;
    case Figure::kProcessingVsPopulation:
      for (std::size_t nb = 1; nb <= 10; ++nb) {
        spec.population_values.push_back(nb);
      }
      break;
    case Figure::kResponseVsInterval:
      for (std::int64_t x = 1; x <= 10; ++x) spec.interval_seconds.push_back(x);
      break;
  }
  return spec;
}

void SweepSpec::validate() const {
  switch (figure) {
    case Figure::kSatisfiedVsChannels:
    case Figure::kGainVsChannels:
      if (channel_values.empty()) throw ConfigError("empty channel range");
      if (!dataset || dataset->empty()) throw ConfigError("empty dataset");
      break;
    case Figure::kProcessingVsPopulation:
      if (population_values.empty()) throw ConfigError("empty population range");
      if (repeats < 1) throw ConfigError("repeats must be >= 1");
      break;
    case Figure::kResponseVsInterval:
      if (interval_seconds.empty()) throw ConfigError("empty interval range");
      if (fixed_population < 1) throw ConfigError("nb must be >= 1");
      for (std::int64_t x : interval_seconds) {
        if (x <= 0) throw ConfigError("arrival interval must be > 0");
      }
      break;
  }
}

std::vector<ResultRow> run_sweep(const SweepSpec& spec, ExecutionPolicy exec) {
  spec.validate();
  switch (spec.figure) {
    case Figure::kSatisfiedVsChannels:
    case Figure::kGainVsChannels:
      return sweep_channels(*spec.dataset, spec.channel_values, exec);
    case Figure::kProcessingVsPopulation: {
      std::size_t largest = 0;
      for (std::size_t nb : spec.population_values) largest = std::max(largest, nb);
      // Every population is a prefix of one instance, so larger nb only ever
      // adds bids.
      const auto largest_instance = gen_random_instance(spec.seed, largest,
                                            spec.max_channels_per_bid,
                                            spec.max_price);
      return sweep_population(
          spec.population_values, spec.fixed_channels,
          [&](std::size_t nb) {
            return std::vector<Bid>(largest_instance.begin(),
                                    largest_instance.begin() + nb);
          },
          spec.repeats);
    }
    case Figure::kResponseVsInterval:
      return sweep_interval(spec.fixed_population, spec.interval_seconds,
                            spec.pu_launch_delay, spec.seed, exec);
  }
  throw ConfigError("unknown figure");
}

double least_squares_slope(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = std::min(x.size(), y.size());
  if (n < 2) return 0.0;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxx == 0.0 ? 0.0 : sxy / sxx;
}

}  // namespace spectrum
