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
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "asmi/baseline.hpp"
#include "asmi/center.hpp"
#include "asmi/kernel.hpp"
#include "asmi/radio.hpp"
#include "asmi/router.hpp"
#include "asmi/scenario.hpp"
#include "asmi/sensor.hpp"

namespace asmi {

/// Pipeline-wide tallies. `emitted` counts (frame, covering router)
/// transmissions so that emitted == delivered + radio_lost, and
/// delivered == dropped + accepted + deduped + quarantined + malformed once
/// the run has drained.
struct RunSummary {
  std::uint64_t frames_emitted = 0;
  std::uint64_t events_emitted = 0;
  std::uint64_t status_emitted = 0;
  std::uint64_t emitted = 0;
  std::uint64_t delivered = 0;
  std::uint64_t radio_lost = 0;
  std::uint64_t dropped = 0;
  std::uint64_t forwarded = 0;
  std::uint64_t accepted = 0;
  std::uint64_t deduped = 0;
  std::uint64_t quarantined = 0;
  std::uint64_t malformed = 0;
};

struct SensorOutcome {
  std::uint32_t sensor_id = 0;
  std::uint64_t events_emitted = 0;
  std::uint64_t status_emitted = 0;
  std::uint64_t missing_frames = 0;
  std::size_t gap_ranges = 0;
  Liveness liveness = Liveness::kOk;
};

struct ComparisonRow {
  std::string scenario_id;
  std::string pipeline;  // "ASMI" or "AMI"
  std::uint32_t sensor_id = 0;
  ErrorReport report;
};

/// One end-to-end run of a scenario inside a private kernel.
///
/// After the horizon the run keeps going until every delivery in flight
/// has reached a router, been flushed, and crossed the backhaul, so nothing
/// emitted is left unaccounted for.
class Simulation {
public:
  using FrameObserver = std::function<void(SimTime, const PiFrame&)>;
  using RecordObserver = std::function<void(const ForwardedRecord&)>;

  explicit Simulation(const Scenario& scenario);
  ~Simulation();
  Simulation(const Simulation&) = delete;
  Simulation& operator=(const Simulation&) = delete;

  /// Called for every frame a sensor emits, with the true emission time.
  void on_emit(FrameObserver observer) { on_emit_ = std::move(observer); }
  /// Called for every record as it reaches the center, in arrival order.
  void on_forward(RecordObserver observer) { on_forward_ = std::move(observer); }
  void enable_trace(bool on) { kernel_.enable_trace(on); }

  void run();

  const Scenario& scenario() const { return scenario_; }
  const Center& center() const { return center_; }
  const Kernel& kernel() const { return kernel_; }
  const Router& router(std::uint32_t router_id) const { return routers_.at(router_id); }
  RunSummary summary() const;
  std::vector<SensorOutcome> sensor_outcomes() const;
  std::uint64_t frames_emitted_by(std::uint32_t sensor_id) const;

  /// ASMI and (if enabled) AMI error reports for every sensor, ASMI first.
  std::vector<ComparisonRow> comparison() const;

private:
  struct Driver;

  void deliver(std::uint32_t sensor_id, const PiFrame& frame, SimTime t);
  void schedule_flush(Router& router, SimTime at);
  void schedule_sync(SimTime at);

  Scenario scenario_;
  Kernel kernel_;
  Radio radio_;
  Center center_;
  std::map<std::uint32_t, Router> routers_;
  std::vector<std::unique_ptr<Driver>> drivers_;
  std::map<std::uint32_t, std::size_t> driver_index_;
  SimTime drain_end_{};
  bool ran_ = false;
  FrameObserver on_emit_;
  RecordObserver on_forward_;
};

}  // namespace asmi
