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
#include <span>
#include <stdexcept>
#include <vector>

#include "asmi/signal.hpp"
#include "asmi/sim_time.hpp"

namespace asmi {

// Synchronous polling baseline and the error metrics shared by both
// pipelines.

struct AmiSample {
  std::uint32_t sensor_id = 0;
  SimTime t;
  double value = 0.0;
};

struct ErrorReport {
  double sup_abs_error = 0.0;
  double mean_abs_error = 0.0;
  double rmse = 0.0;
  std::uint64_t message_count = 0;
  std::uint64_t bytes_on_air = 0;
};

class NonPositiveInterval : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class ZeroBudget : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Exact readings at dt, 2*dt, ... up to the horizon, taken whether or not
/// the parameter moved.
std::vector<AmiSample> poll(const Signal& signal, SimTime dt, SimTime horizon, std::uint32_t sensor_id = 0);

/// Zero-order hold over polls; p0 before the first one.
double reconstruct_ami(std::span<const AmiSample> samples, SimTime t, double p0);

using Estimator = std::function<double(SimTime)>;

/// Errors of `estimator` against the signal on the grid 0, step, 2*step, ...
/// up to the horizon. bytes_on_air is message_count frames of 14 bytes.
ErrorReport error_stats(const Signal& truth, const Estimator& estimator, SimTime grid_step, SimTime horizon,
                        std::uint64_t message_count = 0);

/// floor(horizon / message_count): the polling interval that spends the
/// same number of messages as the event-driven pipeline.
SimTime matched_budget_interval(std::uint64_t asmi_message_count, SimTime horizon);

}  // namespace asmi
