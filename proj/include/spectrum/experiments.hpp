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


#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "spectrum/bid.hpp"
#include "spectrum/kernels.hpp"
#include "spectrum/sim_clock.hpp"

namespace spectrum {

enum class Figure {
  kSatisfiedVsChannels = 6,
  kGainVsChannels = 7,
  kProcessingVsPopulation = 8,
  kResponseVsInterval = 9,
};

/// Throws ConfigError for anything but 6..9.
Figure parse_figure(int number);

// Policies in the order rows are emitted.
inline constexpr Policy kAllPolicies[] = {Policy::kDpSealed,
                                          Policy::kGreedySealed, Policy::kFifo};
inline constexpr Policy kSealedPolicies[] = {Policy::kDpSealed,
                                             Policy::kGreedySealed};

/// One output line. Columns that do not belong to the sweep stay empty.
struct ResultRow {
  Policy policy = Policy::kDpSealed;
  std::int64_t param = 0;  // m, nb, or X in whole seconds
  std::optional<std::size_t> satisfied;
  std::optional<Money> total_gain;
  std::optional<std::chrono::nanoseconds> mean_processing;
  std::optional<SuId> su_id;
  std::optional<SimDuration> response_time;

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

/// Satisfied count and PU gain for every (policy, m). Cells are independent
/// and run across an OpenMP team unless `exec` is kSerial; row order is
/// policy-major, m ascending, regardless of completion order.
std::vector<ResultRow> sweep_channels(std::span<const Bid> dataset,
                                      std::span<const std::int64_t> m_values,
                                      ExecutionPolicy exec = ExecutionPolicy::kAuto);

using InstanceGenerator = std::function<std::vector<Bid>(std::size_t nb)>;

/// Mean wall-clock allocation time per (policy, nb) over `repeats` calls.
/// Always runs serially so cells do not perturb each other's timings.
std::vector<ResultRow> sweep_population(std::span<const std::size_t> nb_values,
                                        std::int64_t m,
                                        const InstanceGenerator& generator,
                                        std::size_t repeats);

/// Response time of every SU for every arrival interval X (whole seconds),
/// one simulation per (sealed policy, X).
std::vector<ResultRow> sweep_interval(std::size_t nb,
                                      std::span<const std::int64_t> interval_seconds,
                                      SimDuration pu_launch_delay,
                                      std::uint64_t seed,
                                      ExecutionPolicy exec = ExecutionPolicy::kAuto);

/// Complete description of one figure run; `defaults_for` fills in the
/// standard parameters for that figure.
struct SweepSpec {
  Figure figure = Figure::kSatisfiedVsChannels;
  std::vector<std::int64_t> channel_values;        // figures 6, 7
  std::vector<std::size_t> population_values;      // figure 8
  std::vector<std::int64_t> interval_seconds;      // figure 9
  std::int64_t fixed_channels = 5;                 // figure 8
  std::size_t fixed_population = 10;               // figure 9
  SimDuration pu_launch_delay{std::chrono::seconds{1}};
  std::optional<std::vector<Bid>> dataset;         // figures 6, 7
  std::uint64_t seed = 1;                          // figures 8, 9
  std::size_t repeats = 1000;                      // figure 8
  std::int64_t max_channels_per_bid = 5;           // figure 8 generator
  Money max_price = Money::from_cents(50000);      // figure 8 generator

  static SweepSpec defaults_for(Figure figure);
  void validate() const;
};

std::vector<ResultRow> run_sweep(const SweepSpec& spec,
                                 ExecutionPolicy exec = ExecutionPolicy::kAuto);

/// Ordinary least-squares slope of y against x. Returns 0 for fewer than
/// two distinct x values.
double least_squares_slope(std::span<const double> x, std::span<const double> y);

}  // namespace spectrum
