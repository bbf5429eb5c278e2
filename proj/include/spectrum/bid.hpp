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

#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "spectrum/money.hpp"

namespace spectrum {

using SuId = std::uint64_t;

/// One secondary user's sealed offer: `channels` requested for `price`.
struct Bid {
  SuId su_id = 0;
  std::int64_t channels = 0;
  Money price;
  std::uint64_t arrival_seq = 0;

  friend bool operator==(const Bid&, const Bid&) = default;
};

/// Free channels on the primary-user side.
class ChannelPool {
 public:
  constexpr ChannelPool() = default;
  /// Throws ValidationError on a negative count.
  explicit ChannelPool(std::int64_t free_channels);

  constexpr std::int64_t free_channels() const { return free_; }

  friend constexpr bool operator==(ChannelPool, ChannelPool) = default;

 private:
  std::int64_t free_ = 0;
};

enum class Verdict { kAccepted, kRejected };

enum class Policy { kFifo, kGreedySealed, kDpSealed };

std::string_view policy_name(Policy policy);
/// Accepts "fifo", "greedy", "dp"; throws ValidationError otherwise.
Policy parse_policy(std::string_view name);

struct AllocationOutcome {
  std::vector<SuId> winners;  // ascending su_id
  std::map<SuId, Verdict> verdicts;
  Money total_gain;
  std::int64_t channels_used = 0;

  friend bool operator==(const AllocationOutcome&,
                         const AllocationOutcome&) = default;
};

/// Checks every Bid invariant and that the sum of all prices fits in
/// Money. Throws ValidationError / CapacityError. Returns that sum.
Money validate_bids(std::span<const Bid> bids);

/// Builds an outcome from a list of accepted positions into `bids`.
AllocationOutcome make_outcome(std::span<const Bid> bids,
                               std::span<const std::size_t> accepted);

}  // namespace spectrum
