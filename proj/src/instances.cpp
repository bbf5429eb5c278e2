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


#include "spectrum/instances.hpp"

#include <random>

#include "spectrum/errors.hpp"

namespace spectrum {

std::vector<Bid> gen_random_instance(std::uint64_t seed, std::size_t nb,
                                     std::int64_t max_channels_per_bid,
                                     Money max_price) {
  if (max_channels_per_bid < 1 || max_price.cents() < 1) {
    throw ConfigError("random instance bounds must be >= 1");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> channels(1, max_channels_per_bid);
  std::uniform_int_distribution<std::int64_t> cents(1, max_price.cents());
  std::vector<Bid> bids;
  bids.reserve(nb);
  for (std::size_t i = 1; i <= nb; ++i) {
    const std::int64_t ch = channels(rng);
    bids.push_back(Bid{i, ch, Money::from_cents(cents(rng)), i - 1});
  }
  return bids;
}

namespace {

std::vector<Bid> from_columns(std::initializer_list<std::int64_t> channels,
                              std::initializer_list<std::int64_t> cents) {
  std::vector<Bid> bids;
  auto c = cents.begin();
  std::uint64_t i = 0;
  for (std::int64_t w : channels) {
    bids.push_back(Bid{i + 1, w, Money::from_cents(*c++), i});
    ++i;
  }
  return bids;
}

}  // namespace

std::vector<Bid> satisfaction_dataset() {
  return from_columns({6, 5, 3, 2, 2}, {30000, 35435, 21260, 14170, 14168});
}

std::vector<Bid> gain_dataset() {
  return from_columns({3, 2, 1, 3, 2}, {28600, 20900, 14100, 48900, 10500});
}

}  // namespace spectrum
