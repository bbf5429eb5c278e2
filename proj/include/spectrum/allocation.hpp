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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "spectrum/bid.hpp"
#include "spectrum/kernels.hpp"
#include "spectrum/money.hpp"

namespace spectrum {

// Winner determination for one sealed-bid round. Every function here is a
// pure function of its arguments and validates its input with
// validate_bids(); an empty bid list or an empty pool yields the empty
// outcome.

/// The (n+1) x (m+1) knapsack table. Row i holds the best total price using
/// the first i bids (list order) for each capacity 0..m.
class DpTable {
 public:
  DpTable(std::size_t bid_count, std::int64_t capacity);

  std::size_t bid_count() const { return bid_count_; }
  std::int64_t capacity() const { return capacity_; }

  Money at(std::size_t row, std::int64_t col) const {
    return Money::from_cents(cells_[index(row, col)]);
  }
  std::span<const std::int64_t> row(std::size_t r) const {
    return {cells_.data() + r * width(), width()};
  }
  std::span<std::int64_t> row(std::size_t r) {
    return {cells_.data() + r * width(), width()};
  }

 private:
  std::size_t width() const { return static_cast<std::size_t>(capacity_) + 1; }
  std::size_t index(std::size_t r, std::int64_t c) const {
    return r * width() + static_cast<std::size_t>(c);
  }

  std::size_t bid_count_;
  std::int64_t capacity_;
  std::vector<std::int64_t> cells_;
};

// Largest table build_dp_table() will allocate.
inline constexpr std::size_t kMaxDpCells = std::size_t{1} << 28;

/// Fills the full table. Throws CapacityError past kMaxDpCells.
DpTable build_dp_table(std::span<const Bid> bids, ChannelPool pool,
                       ExecutionPolicy exec = ExecutionPolicy::kAuto);

/// Maximum total price over subsets whose channel sum fits the pool. Keeps
/// two rows only, so the pool size is not limited by kMaxDpCells.
Money dp_value(std::span<const Bid> bids, ChannelPool pool,
               ExecutionPolicy exec = ExecutionPolicy::kAuto);

/// Optimal winner set recovered by walking back from the bottom-right cell.
/// A bid is excluded whenever excluding it keeps the same value, so among
/// equal-gain optima the one that excludes later-listed bids wins.
AllocationOutcome dp_allocate(std::span<const Bid> bids, ChannelPool pool,
                              ExecutionPolicy exec = ExecutionPolicy::kAuto);

/// Scan-priority ordering between two bids: `greater` means `a` is scanned
/// first. Unit prices are compared exactly by cross-multiplication in
/// 128-bit integers; equal unit prices put the earlier arrival first.
std::strong_ordering compare_unit_price(const Bid& a, const Bid& b);

/// The bids in greedy scan order.
std::vector<Bid> greedy_order(std::span<const Bid> bids);

/// Sealed-bid baseline: scan by unit price, accept what fits, skip what
/// doesn't and keep scanning.
AllocationOutcome greedy_allocate(std::span<const Bid> bids, ChannelPool pool);

/// Non-blocking first-come-first-served by arrival_seq.
AllocationOutcome fifo_allocate(std::span<const Bid> bids, ChannelPool pool);

inline constexpr std::size_t kOracleMaxBids = 20;

/// Exhaustive subset enumeration. Among equal-gain optima picks the same set
/// dp_allocate does. Throws SizeError above kOracleMaxBids bids.
AllocationOutcome oracle_allocate(std::span<const Bid> bids, ChannelPool pool);

AllocationOutcome allocate(Policy policy, std::span<const Bid> bids,
                           ChannelPool pool);

}  // namespace spectrum
