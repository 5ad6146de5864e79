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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "asmi/radio.hpp"
#include "asmi/router.hpp"
#include "asmi/sensor.hpp"
#include "asmi/signal.hpp"
#include "asmi/sim_time.hpp"

namespace asmi {

struct SensorPlacement {
  SensorDescriptor descriptor;
  std::string location;
  std::optional<SimTime> register_at;  // registered at time zero when absent
};

struct BaselineConfig {
  bool enabled = true;
  std::optional<SimTime> dt;  // empty means matched budget per sensor
};

/// Everything one run needs. Time fields are integer milliseconds.
struct Scenario {
  std::string scenario_id = "scenario";
  std::uint64_t seed = 0;
  SimTime horizon = SimTime::hours(24);
  std::map<std::string, Signal> signals;
  std::vector<SensorPlacement> sensors;
  std::vector<RouterConfig> routers;
  CoverageMap coverage;
  ChannelSpec channel;
  SimTime backhaul_delay = SimTime{500};
  SimTime sync_interval = SimTime::hours(1);
  BaselineConfig baseline;
  SimTime error_grid_step = SimTime::seconds(60);
  std::string outputs;
};

struct ValidationError {
  std::string path;
  std::string message;
};

struct ValidationResult {
  std::optional<Scenario> scenario;
  std::vector<ValidationError> errors;

  bool ok() const { return scenario.has_value(); }
};

/// Full structural and referential check of a config document. Every
/// problem found is reported with its field path, e.g. "sensors[2].dP".
ValidationResult validate(const nlohmann::json& document);

/// Referential checks on an already-built scenario (ids resolve, every
/// sensor covered, horizon positive). Used for scenarios built in code.
std::vector<ValidationError> check(const Scenario& scenario);

}  // namespace asmi
