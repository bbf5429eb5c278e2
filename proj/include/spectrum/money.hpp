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
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace spectrum {

/// Non-negative amount of money held as integer hundredths of a currency
/// unit. Every arithmetic operation is overflow-checked and throws
/// CapacityError instead of wrapping.
class Money {
 public:
  constexpr Money() = default;

  /// Throws ValidationError when `cents` is negative.
  static Money from_cents(std::int64_t cents);

  /// Parses a plain decimal string with at most two fractional digits
  /// ("354.35", "212.6", "300"). No sign, no exponent, no binary floating
  /// point anywhere on the path.
  static Money parse(std::string_view text);

  constexpr std::int64_t cents() const { return cents_; }

  /// Renders with exactly two decimals, e.g. "283.38".
  std::string to_string() const;

  Money scaled_by(std::int64_t factor) const;

  friend Money operator+(Money a, Money b);
  Money& operator+=(Money other);

  friend constexpr auto operator<=>(Money, Money) = default;
  friend constexpr bool operator==(Money, Money) = default;

 private:
  constexpr explicit Money(std::int64_t cents) : cents_(cents) {}

  std::int64_t cents_ = 0;
};

std::ostream& operator<<(std::ostream& os, Money m);

}  // namespace spectrum
