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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "spectrum/bid.hpp"
#include "spectrum/money.hpp"

namespace spectrum {

/// Uniform random bids, reproducible per seed: channels in
/// [1, max_channels_per_bid], price in [0.01, max_price], su_id = i and
/// arrival_seq = i - 1 for i = 1..nb.
std::vector<Bid> gen_random_instance(std::uint64_t seed, std::size_t nb,
                                     std::int64_t max_channels_per_bid,
                                     Money max_price);

// The two five-SU datasets used by the channel sweeps.
std::vector<Bid> satisfaction_dataset();  // W={6,5,3,2,2}, C={300,354.35,212.60,141.70,141.68}
std::vector<Bid> gain_dataset();          // W={3,2,1,3,2}, C={286,209,141,489,105}

}  // namespace spectrum
