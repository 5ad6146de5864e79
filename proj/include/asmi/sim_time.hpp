/*
 * Copyright 2026 The ASMI Simulator Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace asmi {

class TimeOverflow : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

/// Simulated time in integer milliseconds since simulation start.
///
/// Arithmetic is checked: a result that would wrap past either end of the
/// 64-bit unsigned range throws TimeOverflow instead.
class SimTime {
public:
  using rep = std::uint64_t;

  constexpr SimTime() = default;
  constexpr explicit SimTime(rep millis) : millis_(millis) {}

  static constexpr SimTime zero() { return SimTime{0}; }
  static constexpr SimTime max() { return SimTime{std::numeric_limits<rep>::max()}; }
  static constexpr SimTime seconds(rep s) { return SimTime{checked_mul(s, 1000)}; }
  static constexpr SimTime minutes(rep m) { return SimTime{checked_mul(m, 60'000)}; }
  static constexpr SimTime hours(rep h) { return SimTime{checked_mul(h, 3'600'000)}; }

  constexpr rep millis() const { return millis_; }
  constexpr double hours_f() const { return static_cast<double>(millis_) / 3'600'000.0; }

  constexpr auto operator<=>(const SimTime&) const = default;

  constexpr SimTime& operator+=(SimTime rhs) {
    if (millis_ > std::numeric_limits<rep>::max() - rhs.millis_) {
      throw TimeOverflow("SimTime addition overflows");
    }
    millis_ += rhs.millis_;
    return *this;
  }
  constexpr SimTime& operator-=(SimTime rhs) {
    if (rhs.millis_ > millis_) {
      throw TimeOverflow("SimTime subtraction underflows");
    }
    millis_ -= rhs.millis_;
    return *this;
  }
  friend constexpr SimTime operator+(SimTime a, SimTime b) { return a += b; }
  friend constexpr SimTime operator-(SimTime a, SimTime b) { return a -= b; }
  friend constexpr SimTime operator*(SimTime a, rep k) { return SimTime{checked_mul(a.millis_, k)}; }
  friend constexpr SimTime operator*(rep k, SimTime a) { return a * k; }

  // Saturates at zero instead of throwing.
  friend constexpr SimTime saturating_sub(SimTime a, SimTime b) {
    return a.millis_ > b.millis_ ? SimTime{a.millis_ - b.millis_} : SimTime{};
  }

  friend std::ostream& operator<<(std::ostream& os, SimTime t) { return os << t.millis_ << "ms"; }

private:
  static constexpr rep checked_mul(rep a, rep b) {
    if (b != 0 && a > std::numeric_limits<rep>::max() / b) {
      throw TimeOverflow("SimTime multiplication overflows");
    }
    return a * b;
  }

  rep millis_ = 0;
};

}  // namespace asmi
