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


#include "spectrum/allocation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "spectrum/errors.hpp"

namespace spectrum {

DpTable::DpTable(std::size_t bid_count, std::int64_t capacity)
    : bid_count_(bid_count), capacity_(capacity) {
  const std::size_t w = width();
  if (w != 0 && bid_count + 1 > kMaxDpCells / w) {
    throw CapacityError("dp table of " + std::to_string(bid_count + 1) + "x" +
                        std::to_string(w) + " cells exceeds the limit");
  }
  cells_.assign((bid_count + 1) * w, 0);
}

DpTable build_dp_table(std::span<const Bid> bids, ChannelPool pool,
                       ExecutionPolicy exec) {
  validate_bids(bids);
  DpTable table(bids.size(), pool.free_channels());
  for (std::size_t i = 1; i <= bids.size(); ++i) {
    const Bid& bid = bids[i - 1];
    relax_row(table.row(i - 1), table.row(i), bid.channels, bid.price.cents(),
              exec);
  }
  return table;
}

Money dp_value(std::span<const Bid> bids, ChannelPool pool,
               ExecutionPolicy exec) {
  validate_bids(bids);
  const auto width = static_cast<std::size_t>(pool.free_channels()) + 1;
  std::vector<std::int64_t> prev(width, 0);
  std::vector<std::int64_t> next(width, 0);
  for (const Bid& bid : bids) {
    relax_row(prev, next, bid.channels, bid.price.cents(), exec);
    prev.swap(next);
  }
  return Money::from_cents(prev.back());
}

AllocationOutcome dp_allocate(std::span<const Bid> bids, ChannelPool pool,
                              ExecutionPolicy exec) {
  const DpTable table = build_dp_table(bids, pool, exec);
  std::vector<std::size_t> accepted;
  std::int64_t j = pool.free_channels();
  for (std::size_t i = bids.size(); i >= 1; --i) {
    if (table.row(i)[j] == table.row(i - 1)[j]) continue;
    accepted.push_back(i - 1);
    j -= bids[i - 1].channels;
  }
  std::reverse(accepted.begin(), accepted.end());
  return make_outcome(bids, accepted);
}

std::strong_ordering compare_unit_price(const Bid& a, const Bid& b) {
  // price_a / channels_a  vs  price_b / channels_b, both denominators >= 1.
  const __int128 lhs = static_cast<__int128>(a.price.cents()) * b.channels;
  const __int128 rhs = static_cast<__int128>(b.price.cents()) * a.channels;
  if (lhs != rhs) {
    return lhs < rhs ? std::strong_ordering::less
                     : std::strong_ordering::greater;
  }
  return b.arrival_seq <=> a.arrival_seq;
}

namespace {

AllocationOutcome scan_in_order(std::span<const Bid> bids,
                                std::span<const std::size_t> order,
                                ChannelPool pool) {
  std::int64_t left = pool.free_channels();
  std::vector<std::size_t> accepted;
  for (std::size_t idx : order) {
    if (bids[idx].channels <= left) {
      left -= bids[idx].channels;
      accepted.push_back(idx);
    }
  }
  return make_outcome(bids, accepted);
}

std::vector<std::size_t> positions(std::size_t n) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return idx;
}

std::vector<std::size_t> greedy_positions(std::span<const Bid> bids) {
  auto idx = positions(bids.size());
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    return compare_unit_price(bids[x], bids[y]) > 0;
  });
  return idx;
}

}  // namespace

std::vector<Bid> greedy_order(std::span<const Bid> bids) {
  validate_bids(bids);
  std::vector<Bid> out;
  out.reserve(bids.size());
  for (std::size_t idx : greedy_positions(bids)) out.push_back(bids[idx]);
  return out;
}

AllocationOutcome greedy_allocate(std::span<const Bid> bids, ChannelPool pool) {
  validate_bids(bids);
  return scan_in_order(bids, greedy_positions(bids), pool);
}

AllocationOutcome fifo_allocate(std::span<const Bid> bids, ChannelPool pool) {
  validate_bids(bids);
  auto idx = positions(bids.size());
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    return bids[x].arrival_seq < bids[y].arrival_seq;
  });
  return scan_in_order(bids, idx, pool);
}

AllocationOutcome oracle_allocate(std::span<const Bid> bids, ChannelPool pool) {
  if (bids.size() > kOracleMaxBids) {
    throw SizeError("oracle enumeration refuses " +
                    std::to_string(bids.size()) + " bids (max " +
                    std::to_string(kOracleMaxBids) + ")");
  }
  validate_bids(bids);
  const std::size_t n = bids.size();
  // Ascending masks with strict improvement keep the numerically smallest
  // optimal mask, i.e. the one excluding the highest positions first; this is
  // exactly the set dp_allocate's walk-back produces.
  std::uint32_t best_mask = 0;
  std::int64_t best_gain = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    __int128 channels = 0;
    std::int64_t gain = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) {
        channels += bids[i].channels;
        gain += bids[i].price.cents();
      }
    }
    if (channels <= pool.free_channels() && gain > best_gain) {
      best_gain = gain;
      best_mask = mask;
    }
  }
  std::vector<std::size_t> accepted;
  for (std::size_t i = 0; i < n; ++i) {
    if (best_mask >> i & 1U) accepted.push_back(i);
  }
  return make_outcome(bids, accepted);
}

AllocationOutcome allocate(Policy policy, std::span<const Bid> bids,
                           ChannelPool pool) {
  switch (policy) {
    case Policy::kFifo:
      return fifo_allocate(bids, pool);
    case Policy::kGreedySealed:
      return greedy_allocate(bids, pool);
    case Policy::kDpSealed:
      return dp_allocate(bids, pool);
  }
  throw ValidationError("unknown policy");
}

}  // namespace spectrum
