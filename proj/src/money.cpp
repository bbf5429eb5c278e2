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


#include "spectrum/money.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "spectrum/errors.hpp"

namespace spectrum {

Money Money::from_cents(std::int64_t cents) {
  if (cents < 0) {
    throw ValidationError("negative amount: " + std::to_string(cents) +
                          " cents");
  }
  return Money(cents);
}

Money Money::parse(std::string_view text) {
  auto fail = [&](const char* why) -> Money {
    throw ValidationError("invalid price '" + std::string(text) + "': " + why);
  };
  if (text.empty()) return fail("empty");
  if (text.front() == '-') return fail("negative price");

  const auto dot = text.find('.');
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac =
      dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);

  if (whole.empty()) return fail("missing integer part");
  if (dot != std::string_view::npos && frac.empty()) {
    return fail("missing digits after decimal point");
  }
  if (frac.size() > 2) return fail("more than 2 decimal places");

  constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
  std::int64_t units = 0;
  for (char ch : whole) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      return fail("not a decimal number");
    }
    if (units > (kMax - (ch - '0')) / 10) return fail("too large");
    units = units * 10 + (ch - '0');
  }
  std::int64_t hundredths = 0;
  for (std::size_t i = 0; i < 2; ++i) {
    hundredths *= 10;
    if (i < frac.size()) {
      const char ch = frac[i];
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        return fail("not a decimal number");
      }
      hundredths += ch - '0';
    }
  }
  if (units > (kMax - hundredths) / 100) return fail("too large");
  return Money(units * 100 + hundredths);
}

std::string Money::to_string() const {
  std::string frac = std::to_string(cents_ % 100);
  if (frac.size() < 2) frac.insert(0, "0");
  return std::to_string(cents_ / 100) + "." + frac;
}

Money Money::scaled_by(std::int64_t factor) const {
  if (factor < 0) throw ValidationError("negative scale factor");
  std::int64_t out = 0;
  if (__builtin_mul_overflow(cents_, factor, &out)) {
    throw CapacityError("money overflow scaling " + to_string() + " by " +
                        std::to_string(factor));
  }
  return Money(out);
}

Money operator+(Money a, Money b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a.cents_, b.cents_, &out)) {
    throw CapacityError("money overflow adding " + a.to_string() + " and " +
                        b.to_string());
  }
  return Money(out);
}

Money& Money::operator+=(Money other) { return *this = *this + other; }

std::ostream& operator<<(std::ostream& os, Money m) {
  return os << m.to_string();
}

}  // namespace spectrum
