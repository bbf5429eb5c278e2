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
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "spectrum/allocation.hpp"
#include "spectrum/protocol.hpp"
#include "spectrum/sim_clock.hpp"

namespace spectrum {

struct Demand {
  SuId su_id = 0;
  std::int64_t channels = 0;
  Money price;

  friend bool operator==(const Demand&, const Demand&) = default;
};

struct GeneratedDemands {
  std::uint64_t seed = 1;
  std::int64_t max_channels_per_bid = 5;
  Money max_price = Money::from_cents(50000);
};

/// One run: `nb` SUs arrive every `arrival_interval`, the PU is launched
/// `pu_launch_delay` after the last arrival and decides on the spot.
/// Explicit demands are taken in arrival order (the i-th entry is SU_i).
struct SimConfig {
  std::size_t nb = 0;
  std::int64_t channels = 0;
  SimDuration arrival_interval{std::chrono::seconds{1}};
  SimDuration pu_launch_delay{std::chrono::seconds{1}};
  Policy policy = Policy::kDpSealed;
  std::variant<std::vector<Demand>, GeneratedDemands> demands;
};

/// Throws ConfigError on an invalid config.
void validate_config(const SimConfig& config);

enum class EventKind {
  kSuArrival,
  kBidDelivered,
  kPuLaunch,
  kVerdictDelivered,
  kProtocolError,
};

std::string_view event_kind_name(EventKind kind);

struct LoggedEvent {
  SimTime time{};
  std::uint64_t seq = 0;  // tiebreak among equal timestamps
  EventKind kind = EventKind::kSuArrival;
  AgentId agent = 0;
  std::string detail;  // no commas; safe to drop into a CSV column

  friend bool operator==(const LoggedEvent&, const LoggedEvent&) = default;
};

struct SimReport {
  AllocationOutcome outcome;
  std::map<SuId, SimDuration> response_times;
  std::chrono::nanoseconds processing_wall_time{0};
  SimTime decision_time{};
  std::vector<LoggedEvent> event_log;
  std::vector<ProtocolMessage> transcript;
};

struct Arrival {
  std::size_t su_index = 0;  // 1-based
  SimTime time{};

  friend bool operator==(const Arrival&, const Arrival&) = default;
};

/// SU_i arrives at (i - 1) * interval, i = 1..nb.
std::vector<Arrival> schedule_arrivals(std::size_t nb, SimDuration interval);

/// Deterministic discrete-event run. Everything except
/// processing_wall_time is a pure function of `config`.
SimReport run_simulation(const SimConfig& config);

struct ProcessingMeasurement {
  std::chrono::nanoseconds mean{0};
  std::chrono::nanoseconds total{0};
  AllocationOutcome outcome;
};

/// Wall-clock cost of allocate() on a steady clock, averaged over
/// `repeats` back-to-back calls (repeats == 0 is treated as 1).
ProcessingMeasurement measure_processing(std::span<const Bid> bids,
                                         ChannelPool pool, Policy policy,
                                         std::size_t repeats = 1);

}  // namespace spectrum
