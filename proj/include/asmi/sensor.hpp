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
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "asmi/grid.hpp"
#include "asmi/kernel.hpp"
#include "asmi/pi_frame.hpp"
#include "asmi/signal.hpp"

namespace asmi {

struct SensorDescriptor {
  std::uint32_t sensor_id = 0;
  std::string parameter;  // e.g. "electricity", "air_temperature", "pm2_5"
  std::string unit;
  double dp = 1.0;
  double p0 = 0.0;
  TrackingMode mode = TrackingMode::kBidirectional;
  SimTime status_interval = SimTime::hours(6);
  std::string signal_id;

  double reference(std::int64_t level_index) const { return grid_level(p0, dp, level_index); }
};

class InvalidDescriptor : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class MonotonicityViolated : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

class CounterExhausted : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

void validate(const SensorDescriptor& d);

struct SensorState {
  std::int32_t ref_level_index = 0;
  std::uint32_t seq_no = 0;
  SimTime next_status_at{};
  std::optional<double> last_value;

  /// State at activation: level 0, nothing sent, first heartbeat one
  /// status interval in.
  static SensorState activate(const SensorDescriptor& d);
};

/// Emits one EVENT per grid quantum the reading has moved past the
/// reference. MONOTONIC sensors only count upward and reject a reading
/// lower than the previous one.
std::vector<PiFrame> observe(SensorState& state, const SensorDescriptor& d, SimTime t, double p);

std::optional<PiFrame> heartbeat(SensorState& state, const SensorDescriptor& d, SimTime t);

/// Drives one sensor from its ground-truth signal inside a kernel.
///
/// observe() runs exactly at the crossing instants of the signal and
/// heartbeat() at every status tick, both up to and including the horizon.
/// When both fall on the same millisecond the observation goes first.
class SamplingDriver {
public:
  using Emit = std::function<void(SimTime, const PiFrame&)>;

  SamplingDriver(SensorDescriptor descriptor, const Signal& signal, SimTime horizon, Emit emit);
  SamplingDriver(const SamplingDriver&) = delete;
  SamplingDriver& operator=(const SamplingDriver&) = delete;

  /// Schedules the first action. The driver must outlive the kernel run.
  void start(Kernel& kernel);

  const SensorDescriptor& descriptor() const { return descriptor_; }
  const SensorState& state() const { return state_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::uint64_t events_emitted() const { return events_emitted_; }
  std::uint64_t status_emitted() const { return status_emitted_; }

private:
  std::optional<SimTime> next_wakeup() const;
  void wake(Kernel& kernel);

  SensorDescriptor descriptor_;
  const Signal& signal_;
  SimTime horizon_;
  Emit emit_;
  SensorState state_;
  std::vector<Crossing> crossings_;
  std::size_t next_crossing_ = 0;
  std::uint64_t events_emitted_ = 0;
  std::uint64_t status_emitted_ = 0;
};

}  // namespace asmi
