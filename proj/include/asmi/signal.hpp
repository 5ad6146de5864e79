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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "asmi/grid.hpp"
#include "asmi/sim_time.hpp"

namespace asmi {

enum class SignalKind {
  kCumulative,
  kAmbient,
};

struct LoadInterval {
  SimTime start;
  SimTime end;
  double rate = 0.0;  // units per hour
};

/// Cumulative counter driven by a base rate plus additive load intervals.
struct StepLoadSpec {
  double base_rate = 0.0;  // units per hour
  std::vector<LoadInterval> intervals;
};

/// mean + amplitude*sin(2*pi*(t - phase)/period) + piecewise-constant
/// Gaussian random walk that steps every noise_step.
struct DiurnalSpec {
  double mean = 0.0;
  double amplitude = 0.0;
  SimTime period = SimTime::hours(24);
  SimTime phase{};
  double noise_sigma = 0.0;
  SimTime noise_step = SimTime::minutes(10);
};

class OutOfHorizon : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

class InvalidSignalSpec : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class NonPositiveDelta : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Ground-truth controlled parameter P(t) over [0, horizon].
///
/// Evaluation is pure. The noise walk of an ambient signal is drawn once at
/// construction from the signal's own seed.
class Signal {
public:
  static Signal cumulative(StepLoadSpec spec, SimTime horizon, std::string unit = "kWh");
  static Signal ambient(DiurnalSpec spec, SimTime horizon, std::uint64_t seed, std::string unit = "degC");

  SignalKind kind() const { return kind_; }
  SimTime horizon() const { return horizon_; }
  const std::string& unit() const { return unit_; }
  std::uint64_t seed() const { return seed_; }

  double value_at(SimTime t) const;

  /// Sorted instants (0 first) splitting [0, horizon] into pieces on which
  /// the millisecond-sampled signal is continuous and monotone.
  std::vector<SimTime> monotone_breakpoints() const;

private:
  Signal() = default;

  double cumulative_at(SimTime t) const;
  double ambient_at(SimTime t) const;

  SignalKind kind_ = SignalKind::kCumulative;
  SimTime horizon_{};
  std::string unit_;
  std::uint64_t seed_ = 0;
  std::variant<StepLoadSpec, DiurnalSpec> spec_;
  std::vector<double> noise_walk_;
};

struct Crossing {
  SimTime t;
  int direction = 0;  // +1 or -1

  bool operator==(const Crossing&) const = default;
};

/// Every instant at which a sensor tracking the grid P0 + k*dP would emit,
/// one entry per quantum, found by bisection to millisecond resolution.
/// Entries at the same instant appear in emission order.
std::vector<Crossing> crossing_times(const Signal& signal, double p0, double dp, SimTime horizon,
                                     TrackingMode mode = TrackingMode::kBidirectional);

}  // namespace asmi
