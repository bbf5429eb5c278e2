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


#include "spectrum/kernels.hpp"

#include <algorithm>
#include <cassert>

#include <omp.h>

namespace spectrum {

bool use_parallel(ExecutionPolicy policy, std::size_t work) {
  switch (policy) {
    case ExecutionPolicy::kSerial:
      return false;
    case ExecutionPolicy::kParallel:
      return true;
    case ExecutionPolicy::kAuto:
      return work >= kParallelRowThreshold && omp_get_max_threads() > 1;
  }
  return false;
}

void relax_row_serial(std::span<const std::int64_t> prev,
                      std::span<std::int64_t> next, std::int64_t weight,
                      std::int64_t price) {
  assert(prev.size() == next.size());
  const auto width = static_cast<std::int64_t>(prev.size());
  const std::int64_t split = std::min(weight, width);
  for (std::int64_t j = 0; j < split; ++j) next[j] = prev[j];
  for (std::int64_t j = split; j < width; ++j) {
    next[j] = std::max(prev[j], price + prev[j - weight]);
  }
}

void relax_row_parallel(std::span<const std::int64_t> prev,
                        std::span<std::int64_t> next, std::int64_t weight,
                        std::int64_t price) {
  assert(prev.size() == next.size());
  const auto width = static_cast<std::int64_t>(prev.size());
  const std::int64_t* in = prev.data();
  std::int64_t* out = next.data();
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < width; ++j) {
    out[j] = j < weight ? in[j] : std::max(in[j], price + in[j - weight]);
  }
}

void relax_row(std::span<const std::int64_t> prev, std::span<std::int64_t> next,
               std::int64_t weight, std::int64_t price,
               ExecutionPolicy policy) {
  if (use_parallel(policy, prev.size())) {
    relax_row_parallel(prev, next, weight, price);
  } else {
    relax_row_serial(prev, next, weight, price);
  }
}

}  // namespace spectrum
