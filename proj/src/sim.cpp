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


#include "spectrum/sim.hpp"

#include <queue>
#include <unordered_set>

#include "spectrum/errors.hpp"
#include "spectrum/instances.hpp"

namespace spectrum {

std::string format_seconds(SimDuration d) {
  const auto ms = d.count();
  const bool negative = ms < 0;
  const auto abs_ms = negative ? -ms : ms;
  std::string out = std::to_string(abs_ms / 1000);
  if (const auto frac = abs_ms % 1000; frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(0, 3 - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return negative ? "-" + out : out;
}

std::string_view event_kind_name(EventKind kind) {
  switch (kind) {
    case EventKind::kSuArrival:
      return "su_arrival";
    case EventKind::kBidDelivered:
      return "bid_delivered";
    case EventKind::kPuLaunch:
      return "pu_launch";
    case EventKind::kVerdictDelivered:
      return "verdict_delivered";
    case EventKind::kProtocolError:
      return "protocol_error";
  }
  return "unknown";
}

void validate_config(const SimConfig& config) {
  if (config.channels < 0) throw ConfigError("channel count must be >= 0");
  if (config.nb > 1 && config.arrival_interval <= SimDuration::zero()) {
    throw ConfigError("arrival interval must be > 0 with more than one SU");
  }
  if (config.pu_launch_delay < SimDuration::zero()) {
    throw ConfigError("PU launch delay must be >= 0");
  }
  if (const auto* demands = std::get_if<std::vector<Demand>>(&config.demands)) {
    if (demands->size() != config.nb) {
      throw ConfigError("nb=" + std::to_string(config.nb) + " but " +
                        std::to_string(demands->size()) + " demands given");
    }
    std::unordered_set<SuId> ids;
    for (const Demand& d : *demands) {
      if (d.su_id == 0 || d.channels < 1) {
        throw ConfigError("demand for SU " + std::to_string(d.su_id) +
                          " needs su_id >= 1 and channels >= 1");
      }
      if (!ids.insert(d.su_id).second) {
        throw ConfigError("duplicate su_id " + std::to_string(d.su_id));
      }
    }
  } else {
    const auto& gen = std::get<GeneratedDemands>(config.demands);
    if (gen.max_channels_per_bid < 1 || gen.max_price.cents() < 1) {
      throw ConfigError("generated demand bounds must be >= 1");
    }
  }
}

std::vector<Arrival> schedule_arrivals(std::size_t nb, SimDuration interval) {
  std::vector<Arrival> out;
  out.reserve(nb);
  for (std::size_t i = 1; i <= nb; ++i) {
    out.push_back(
        {i, SimTime{interval * static_cast<SimDuration::rep>(i - 1)}});
  }
  return out;
}

namespace {

std::vector<Demand> resolve_demands(const SimConfig& config) {
  if (const auto* demands = std::get_if<std::vector<Demand>>(&config.demands)) {
    return *demands;
  }
  const auto& gen = std::get<GeneratedDemands>(config.demands);
  std::vector<Demand> out;
  for (const Bid& b : gen_random_instance(gen.seed, config.nb,
                                          gen.max_channels_per_bid,
                                          gen.max_price)) {
    out.push_back({b.su_id, b.channels, b.price});
  }
  return out;
}

struct SuArrivalEvent {
  std::size_t index;  // into the SU table
};
struct BidDeliveredEvent {
  ProtocolMessage msg;
};
struct PuLaunchEvent {};
struct VerdictDeliveredEvent {
  std::size_t index;
  ProtocolMessage msg;
};

using Payload = std::variant<SuArrivalEvent, BidDeliveredEvent, PuLaunchEvent,
                             VerdictDeliveredEvent>;

struct QueuedEvent {
  SimTime time;
  std::uint64_t seq;
  Payload payload;
};

struct Later {
  bool operator()(const QueuedEvent& a, const QueuedEvent& b) const {
    if (a.time != b.time) return a.time > b.time;
    return a.seq > b.seq;
  }
};

class Simulation {
 public:
  explicit Simulation(const SimConfig& config) : config_(config) {
    pu_.pool = ChannelPool(config.channels);
    pu_.policy = config.policy;
    for (const Demand& d : resolve_demands(config)) {
      SuState su;
      su.su_id = d.su_id;
      su.channels = d.channels;
      su.price = d.price;
      sus_.push_back(su);
    }
  }

  SimReport run() {
    const auto arrivals = schedule_arrivals(sus_.size(), config_.arrival_interval);
    for (const Arrival& a : arrivals) {
      push(a.time, SuArrivalEvent{a.su_index - 1});
    }
    if (sus_.empty()) push(SimTime{} + config_.pu_launch_delay, PuLaunchEvent{});

    while (!queue_.empty()) {
      QueuedEvent ev = queue_.top();
      queue_.pop();
      now_ = ev.time;
      std::visit([this](auto& e) { handle(e); }, ev.payload);
    }

    for (const SuState& su : sus_) {
      if (su.response_time) report_.response_times[su.su_id] = *su.response_time;
    }
    return std::move(report_);
  }

 private:
  void push(SimTime t, Payload p) {
    queue_.push(QueuedEvent{t, next_seq_++, std::move(p)});
  }

  void log(EventKind kind, AgentId agent, std::string detail) {
    report_.event_log.push_back(
        {now_, report_.event_log.size(), kind, agent, std::move(detail)});
  }

  void handle(const SuArrivalEvent& e) {
    SuState& su = sus_[e.index];
    log(EventKind::kSuArrival, su.su_id,
        "channels=" + std::to_string(su.channels) +
            " price=" + su.price.to_string());
    auto sub = su_submit(su, now_);
    su = std::move(sub.state);
    report_.transcript.push_back(sub.message);
    push(now_, BidDeliveredEvent{std::move(sub.message)});
    // The launch follows the final delivery in queue order.
    if (e.index + 1 == sus_.size()) {
      push(now_ + config_.pu_launch_delay, PuLaunchEvent{});
    }
  }

  void handle(const BidDeliveredEvent& e) {
    auto res = pu_receive(std::move(pu_), e.msg);
    pu_ = std::move(res.state);
    if (res.error) {
      log(EventKind::kProtocolError, kPuAgent,
          std::string(protocol_error_name(res.error->kind)));
      return;
    }
    log(EventKind::kBidDelivered, kPuAgent,
        "from=" + std::to_string(e.msg.from) +
            " seq=" + std::to_string(pu_.received.back().arrival_seq));
  }

  void handle(const PuLaunchEvent&) {
    log(EventKind::kPuLaunch, kPuAgent,
        "policy=" + std::string(policy_name(config_.policy)) +
            " bids=" + std::to_string(pu_.received.size()));
    const auto start = std::chrono::steady_clock::now();
    auto decision = pu_close_and_decide(std::move(pu_), now_);
    report_.processing_wall_time = std::chrono::steady_clock::now() - start;
    pu_ = std::move(decision.state);
    report_.outcome = std::move(decision.outcome);
    report_.decision_time = now_;
    for (ProtocolMessage& msg : decision.messages) {
      report_.transcript.push_back(msg);
      push(now_, VerdictDeliveredEvent{index_of(msg.to), std::move(msg)});
    }
  }

  void handle(const VerdictDeliveredEvent& e) {
    SuState& su = sus_[e.index];
    auto res = su_receive(su, e.msg);
    su = std::move(res.state);
    if (res.error) {
      log(EventKind::kProtocolError, su.su_id,
          std::string(protocol_error_name(res.error->kind)));
      return;
    }
    log(EventKind::kVerdictDelivered, su.su_id,
        std::string(message_kind_name(e.msg.kind)) +
            " response_s=" + format_seconds(*su.response_time));
  }

  std::size_t index_of(AgentId id) const {
    for (std::size_t i = 0; i < sus_.size(); ++i) {
      if (sus_[i].su_id == id) return i;
    }
    throw std::logic_error("verdict for unknown SU " + std::to_string(id));
  }

  const SimConfig& config_;
  PuState pu_;
  std::vector<SuState> sus_;
  std::priority_queue<QueuedEvent, std::vector<QueuedEvent>, Later> queue_;
  std::uint64_t next_seq_ = 0;
  SimTime now_{};
  SimReport report_;
};

}  // namespace

SimReport run_simulation(const SimConfig& config) {
  validate_config(config);
  return Simulation(config).run();
}

ProcessingMeasurement measure_processing(std::span<const Bid> bids,
                                         ChannelPool pool, Policy policy,
                                         std::size_t repeats) {
  repeats = std::max<std::size_t>(repeats, 1);
  ProcessingMeasurement out;
  volatile std::int64_t sink = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t r = 0; r < repeats; ++r) {
    out.outcome = allocate(policy, bids, pool);
    sink = sink + out.outcome.total_gain.cents();
  }
  out.total = std::chrono::steady_clock::now() - start;
  out.mean = out.total / static_cast<std::int64_t>(repeats);
  return out;
}

}  // namespace spectrum
