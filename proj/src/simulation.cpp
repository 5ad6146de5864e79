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

#include "asmi/simulation.hpp"

#include <algorithm>
#include <stdexcept>

namespace asmi {

namespace {

// Center-side actor ids: 0 is the center itself (sync, registration),
// router r's backhaul arrivals use r + 1.
constexpr std::uint64_t kCenterSelf = 0;

std::uint64_t backhaul_actor(std::uint32_t router_id) { return std::uint64_t{router_id} + 1; }

}  // namespace

struct Simulation::Driver {
  Driver(SensorPlacement p, const Signal& signal, SimTime horizon, SamplingDriver::Emit emit)
      : placement(std::move(p)), sampler(placement.descriptor, signal, horizon, std::move(emit)) {}

  SensorPlacement placement;
  SamplingDriver sampler;
};

Simulation::Simulation(const Scenario& scenario)
    : scenario_(scenario),
      radio_(scenario.coverage, scenario.channel, scenario.seed),
      center_(scenario.channel.latency) {
  if (auto errors = check(scenario_); !errors.empty()) {
    throw std::invalid_argument("invalid scenario: " + errors.front().path + ": " + errors.front().message);
  }
  drain_end_ = scenario_.horizon + scenario_.channel.latency + scenario_.channel.jitter;

  for (const RouterConfig& rc : scenario_.routers) {
    routers_.emplace(rc.router_id, Router(rc));
    center_.register_router(rc.router_id, rc.location, rc.sync_residual_ms);
  }

  std::vector<const SensorPlacement*> ordered;
  for (const auto& sp : scenario_.sensors) ordered.push_back(&sp);
  std::sort(ordered.begin(), ordered.end(), [](const SensorPlacement* a, const SensorPlacement* b) {
    return a->descriptor.sensor_id < b->descriptor.sensor_id;
  });
  drivers_.reserve(ordered.size());
  for (const SensorPlacement* sp : ordered) {
    const std::uint32_t id = sp->descriptor.sensor_id;
    auto emit = [this, id](SimTime t, const PiFrame& f) {
      if (on_emit_) on_emit_(t, f);
      deliver(id, f, t);
    };
    driver_index_[id] = drivers_.size();
    drivers_.push_back(
        std::make_unique<Driver>(*sp, scenario_.signals.at(sp->descriptor.signal_id), scenario_.horizon, emit));
    if (!sp->register_at) center_.register_sensor(sp->descriptor, sp->location);
  }
}

Simulation::~Simulation() = default;

void Simulation::deliver(std::uint32_t sensor_id, const PiFrame& frame, SimTime t) {
  const FrameBytes bytes = encode(frame);
  for (const Delivery& d : radio_.broadcast(frame, sensor_id, t)) {
    Router& router = routers_.at(d.router_id);
    kernel_.schedule(d.at, ActorRef{ActorClass::kRadio, sensor_id},
                     [this, &router, bytes] { router.receive(bytes, kernel_.now()); });
  }
}

void Simulation::schedule_flush(Router& router, SimTime at) {
  kernel_.schedule(at, ActorRef{ActorClass::kRouter, router.id()}, [this, &router] {
    std::vector<ForwardedRecord> batch = router.flush();
    const SimTime now = kernel_.now();
    if (!batch.empty()) {
      kernel_.schedule(now + scenario_.backhaul_delay, ActorRef{ActorClass::kCenter, backhaul_actor(router.id())},
                       [this, batch = std::move(batch)] {
                         for (const ForwardedRecord& rec : batch) {
                           if (on_forward_) on_forward_(rec);
                           center_.ingest(rec);
                         }
                       });
    }
    if (now < drain_end_) schedule_flush(router, std::min(now + router.config().flush_interval, drain_end_));
  });
}

void Simulation::schedule_sync(SimTime at) {
  kernel_.schedule(at, ActorRef{ActorClass::kCenter, kCenterSelf}, [this] {
    for (auto& [_, router] : routers_) router.apply_time_sync(kernel_.now());
    const SimTime next = kernel_.now() + scenario_.sync_interval;
    if (next <= scenario_.horizon) schedule_sync(next);
  });
}

void Simulation::run() {
  if (ran_) throw std::logic_error("a Simulation runs once");
  ran_ = true;
  const SimTime end = drain_end_ + scenario_.backhaul_delay;

  for (auto& d : drivers_) {
    if (d->placement.register_at && *d->placement.register_at <= end) {
      const Driver* driver = d.get();
      kernel_.schedule(*d->placement.register_at, ActorRef{ActorClass::kCenter, kCenterSelf}, [this, driver] {
        center_.register_sensor(driver->placement.descriptor, driver->placement.location, kernel_.now());
      });
    }
  }
  if (scenario_.sync_interval <= scenario_.horizon) schedule_sync(scenario_.sync_interval);
  for (auto& [_, router] : routers_) {
    schedule_flush(router, std::min(router.config().flush_interval, drain_end_));
  }
  for (auto& d : drivers_) d->sampler.start(kernel_);

  kernel_.run_until(end);
}

RunSummary Simulation::summary() const {
  RunSummary s;
  for (const auto& d : drivers_) {
    s.events_emitted += d->sampler.events_emitted();
    s.status_emitted += d->sampler.status_emitted();
  }
  s.frames_emitted = s.events_emitted + s.status_emitted;
  s.emitted = radio_.attempts();
  s.delivered = radio_.delivered();
  s.radio_lost = radio_.lost();
  for (const auto& [_, r] : routers_) {
    s.dropped += r.dropped();
    s.forwarded += r.forwarded();
  }
  const IngestCounts& c = center_.counts();
  s.accepted = c.accepted;
  s.deduped = c.duplicate;
  s.quarantined = c.quarantined;
  s.malformed = c.malformed;
  return s;
}

std::uint64_t Simulation::frames_emitted_by(std::uint32_t sensor_id) const {
  const auto& d = drivers_.at(driver_index_.at(sensor_id));
  return d->sampler.events_emitted() + d->sampler.status_emitted();
}

std::vector<SensorOutcome> Simulation::sensor_outcomes() const {
  std::vector<SensorOutcome> out;
  for (const auto& d : drivers_) {
    SensorOutcome o;
    o.sensor_id = d->placement.descriptor.sensor_id;
    o.events_emitted = d->sampler.events_emitted();
    o.status_emitted = d->sampler.status_emitted();
    if (center_.is_registered(o.sensor_id)) {
      o.missing_frames = o.events_emitted + o.status_emitted - center_.timeline(o.sensor_id).size();
      o.gap_ranges = center_.detect_gaps(o.sensor_id).size();
      o.liveness = center_.liveness(o.sensor_id, scenario_.horizon);
    } else {
      o.missing_frames = o.events_emitted + o.status_emitted;
      o.liveness = Liveness::kSilent;
    }
    out.push_back(o);
  }
  return out;
}

std::vector<ComparisonRow> Simulation::comparison() const {
  std::vector<ComparisonRow> rows;
  for (const auto& d : drivers_) {
    const SensorDescriptor& desc = d->placement.descriptor;
    const Signal& signal = scenario_.signals.at(desc.signal_id);
    const std::uint64_t messages = d->sampler.events_emitted() + d->sampler.status_emitted();

    Estimator asmi = [&](SimTime t) {
      return center_.is_registered(desc.sensor_id) ? center_.reconstruct(desc.sensor_id, t).value : desc.p0;
    };
    rows.push_back(ComparisonRow{scenario_.scenario_id, "ASMI", desc.sensor_id,
                                 error_stats(signal, asmi, scenario_.error_grid_step, scenario_.horizon, messages)});

    if (!scenario_.baseline.enabled) continue;
    // A sensor that sent nothing gets one poll over the whole horizon.
    const SimTime dt = scenario_.baseline.dt
                           ? *scenario_.baseline.dt
                           : matched_budget_interval(std::max<std::uint64_t>(messages, 1), scenario_.horizon);
    const std::vector<AmiSample> samples = poll(signal, dt, scenario_.horizon, desc.sensor_id);
    Estimator ami = [&](SimTime t) { return reconstruct_ami(samples, t, desc.p0); };
    rows.push_back(ComparisonRow{scenario_.scenario_id, "AMI", desc.sensor_id,
                                 error_stats(signal, ami, scenario_.error_grid_step, scenario_.horizon,
                                             samples.size())});
  }
  return rows;
}

}  // namespace asmi
