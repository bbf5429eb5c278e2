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
#include <span>

namespace spectrum {

enum class ExecutionPolicy {
  kSerial,
  kParallel,
  kAuto,  // parallel only when the work is large enough to amortise a team
};

// Row widths at or above this go parallel under kAuto.
inline constexpr std::size_t kParallelRowThreshold = 1 << 14;

bool use_parallel(ExecutionPolicy policy, std::size_t work);

// One knapsack row relaxation, values in cents:
//   next[j] = prev[j]                                   if j < weight
//   next[j] = max(prev[j], price + prev[j - weight])    otherwise
// Requires prev.size() == next.size() and non-overlapping spans. Callers
// guarantee price + prev[*] cannot overflow (validate_bids bounds it).
void relax_row_serial(std::span<const std::int64_t> prev,
                      std::span<std::int64_t> next, std::int64_t weight,
                      std::int64_t price);

// Same contract; the j loop is split across an OpenMP team.
void relax_row_parallel(std::span<const std::int64_t> prev,
                        std::span<std::int64_t> next, std::int64_t weight,
                        std::int64_t price);

void relax_row(std::span<const std::int64_t> prev, std::span<std::int64_t> next,
               std::int64_t weight, std::int64_t price, ExecutionPolicy policy);

}  // namespace spectrum
