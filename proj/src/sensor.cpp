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

#include "asmi/sensor.hpp"

#include <cmath>
#include <limits>

namespace asmi {

namespace {

std::uint32_t next_seq(SensorState& state) {
  if (state.seq_no == std::numeric_limits<std::uint32_t>::max()) {
    throw CounterExhausted("sensor sequence number exhausted");
  }
  return ++state.seq_no;
}

PiFrame make_frame(SensorState& state, const SensorDescriptor& d, MsgType type) {
  PiFrame f;
  f.msg_type = type;
  f.sensor_id = d.sensor_id;
  f.seq_no = next_seq(state);
  f.level_index = state.ref_level_index;
  return f;
}

}  // namespace

void validate(const SensorDescriptor& d) {
  if (!(d.dp > 0.0) || !std::isfinite(d.dp)) throw InvalidDescriptor("dP must be positive");
  if (!std::isfinite(d.p0)) throw InvalidDescriptor("P0 must be finite");
  if (d.status_interval == SimTime::zero()) throw InvalidDescriptor("status_interval must be positive");
}

SensorState SensorState::activate(const SensorDescriptor& d) {
  SensorState s;
  s.next_status_at = d.status_interval;
  return s;
}

std::vector<PiFrame> observe(SensorState& state, const SensorDescriptor& d, SimTime /*t*/, double p) {
  if (d.mode == TrackingMode::kMonotonic && state.last_value && p < *state.last_value) {
    throw MonotonicityViolated("sensor " + std::to_string(d.sensor_id) + " reading decreased");
  }
  state.last_value = p;

  std::vector<PiFrame> frames;
  while (above_next_level(p, d.p0, d.dp, state.ref_level_index)) {
    if (state.ref_level_index == std::numeric_limits<std::int32_t>::max()) {
      throw CounterExhausted("level index overflow");
    }
    ++state.ref_level_index;
    frames.push_back(make_frame(state, d, MsgType::kEvent));
  }
  if (d.mode == TrackingMode::kBidirectional) {
    while (below_previous_level(p, d.p0, d.dp, state.ref_level_index)) {
      if (state.ref_level_index == std::numeric_limits<std::int32_t>::min()) {
        throw CounterExhausted("level index underflow");
      }
      --state.ref_level_index;
      frames.push_back(make_frame(state, d, MsgType::kEvent));
    }
  }
  return frames;
}

std::optional<PiFrame> heartbeat(SensorState& state, const SensorDescriptor& d, SimTime t) {
  if (t < state.next_status_at) return std::nullopt;
  PiFrame f = make_frame(state, d, MsgType::kStatus);
  state.next_status_at += d.status_interval;
  return f;
}

SamplingDriver::SamplingDriver(SensorDescriptor descriptor, const Signal& signal, SimTime horizon, Emit emit)
    : descriptor_(std::move(descriptor)),
      signal_(signal),
      horizon_(horizon),
      emit_(std::move(emit)),
      state_(SensorState::activate(descriptor_)) {
  validate(descriptor_);
  crossings_ = crossing_times(signal_, descriptor_.p0, descriptor_.dp, horizon_, descriptor_.mode);
}

std::optional<SimTime> SamplingDriver::next_wakeup() const {
  std::optional<SimTime> next;
  if (next_crossing_ < crossings_.size()) next = crossings_[next_crossing_].t;
  if (state_.next_status_at <= horizon_ && (!next || state_.next_status_at < *next)) {
    next = state_.next_status_at;
  }
  return next;
}

void SamplingDriver::start(Kernel& kernel) {
  if (auto at = next_wakeup()) {
    kernel.schedule(*at, ActorRef{ActorClass::kSensor, descriptor_.sensor_id}, [this, &kernel] { wake(kernel); });
  }
}

void SamplingDriver::wake(Kernel& kernel) {
  const SimTime now = kernel.now();
  if (next_crossing_ < crossings_.size() && crossings_[next_crossing_].t == now) {
    while (next_crossing_ < crossings_.size() && crossings_[next_crossing_].t == now) ++next_crossing_;
    for (const PiFrame& f : observe(state_, descriptor_, now, signal_.value_at(now))) {
      ++events_emitted_;
      emit_(now, f);
    }
  }
  if (auto status = heartbeat(state_, descriptor_, now)) {
    ++status_emitted_;
    emit_(now, *status);
  }
  start(kernel);
}

}  // namespace asmi
