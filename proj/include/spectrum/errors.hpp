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

#include <stdexcept>
#include <string>

namespace spectrum {

// Base for every recoverable error raised by the library. The CLI maps
// anything derived from this to exit status 2.
class AuctionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed bids: duplicate bidder, zero channels, negative price, bad row.
class ValidationError : public AuctionError {
 public:
  using AuctionError::AuctionError;
};

// A money sum that would not fit in 64-bit cents.
class CapacityError : public AuctionError {
 public:
  using AuctionError::AuctionError;
};

// Input too large for exhaustive enumeration.
class SizeError : public AuctionError {
 public:
  using AuctionError::AuctionError;
};

// Rejected SimConfig / SweepSpec.
class ConfigError : public AuctionError {
 public:
  using AuctionError::AuctionError;
};

}  // namespace spectrum
