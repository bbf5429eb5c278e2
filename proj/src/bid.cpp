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


#include "spectrum/bid.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "spectrum/errors.hpp"

namespace spectrum {

ChannelPool::ChannelPool(std::int64_t free_channels) : free_(free_channels) {
  if (free_channels < 0) {
    throw ValidationError("channel pool cannot be negative: " +
                          std::to_string(free_channels));
  }
}

std::string_view policy_name(Policy policy) {
  switch (policy) {
    case Policy::kFifo:
      return "fifo";
    case Policy::kGreedySealed:
      return "greedy";
    case Policy::kDpSealed:
      return "dp";
  }
  return "unknown";
}

Policy parse_policy(std::string_view name) {
  if (name == "fifo") return Policy::kFifo;
  if (name == "greedy") return Policy::kGreedySealed;
  if (name == "dp") return Policy::kDpSealed;
  throw ValidationError("unknown policy '" + std::string(name) +
                        "' (expected dp, greedy or fifo)");
}

Money validate_bids(std::span<const Bid> bids) {
  std::unordered_set<SuId> ids;
  std::unordered_set<std::uint64_t> seqs;
  ids.reserve(bids.size());
  seqs.reserve(bids.size());
  Money total;
  for (const Bid& bid : bids) {
    const std::string who = "SU " + std::to_string(bid.su_id);
    if (bid.su_id == 0) throw ValidationError("su_id must be positive");
    if (bid.channels < 1) {
      throw ValidationError(who + ": channels must be >= 1, got " +
                            std::to_string(bid.channels));
    }
    if (!ids.insert(bid.su_id).second) {
      throw ValidationError("duplicate su_id " + std::to_string(bid.su_id));
    }
    if (!seqs.insert(bid.arrival_seq).second) {
      throw ValidationError(who + ": duplicate arrival_seq " +
                            std::to_string(bid.arrival_seq));
    }
    total += bid.price;
  }
  return total;
}

AllocationOutcome make_outcome(std::span<const Bid> bids,
                               std::span<const std::size_t> accepted) {
  AllocationOutcome out;
  for (const Bid& bid : bids) out.verdicts[bid.su_id] = Verdict::kRejected;
  for (std::size_t idx : accepted) {
    const Bid& bid = bids[idx];
    out.verdicts[bid.su_id] = Verdict::kAccepted;
    out.winners.push_back(bid.su_id);
    out.total_gain += bid.price;
    out.channels_used += bid.channels;
  }
  std::sort(out.winners.begin(), out.winners.end());
  return out;
}

}  // namespace spectrum
