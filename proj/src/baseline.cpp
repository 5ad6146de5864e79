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

#include "asmi/baseline.hpp"

#include <algorithm>
#include <cmath>

#include "asmi/pi_frame.hpp"

namespace asmi {

std::vector<AmiSample> poll(const Signal& signal, SimTime dt, SimTime horizon, std::uint32_t sensor_id) {
  if (dt == SimTime::zero()) throw NonPositiveInterval("polling interval must be positive");
  std::vector<AmiSample> samples;
  samples.reserve(horizon.millis() / dt.millis());
  for (std::uint64_t k = 1; k <= horizon.millis() / dt.millis(); ++k) {
    const SimTime t = dt * k;
    samples.push_back(AmiSample{sensor_id, t, signal.value_at(t)});
  }
  return samples;
}

double reconstruct_ami(std::span<const AmiSample> samples, SimTime t, double p0) {
  auto it = std::upper_bound(samples.begin(), samples.end(), t,
                             [](SimTime v, const AmiSample& s) { return v < s.t; });
  return it == samples.begin() ? p0 : std::prev(it)->value;
}

ErrorReport error_stats(const Signal& truth, const Estimator& estimator, SimTime grid_step, SimTime horizon,
                        std::uint64_t message_count) {
  if (grid_step == SimTime::zero()) throw NonPositiveInterval("error grid step must be positive");
  ErrorReport report;
  double sum_abs = 0.0;
  double sum_sq = 0.0;
  std::uint64_t n = 0;
  for (SimTime t{};; t += grid_step) {
    const double err = std::abs(estimator(t) - truth.value_at(t));
    report.sup_abs_error = std::max(report.sup_abs_error, err);
    sum_abs += err;
    sum_sq += err * err;
    ++n;
    if (horizon - t < grid_step) break;
  }
  report.mean_abs_error = sum_abs / static_cast<double>(n);
  report.rmse = std::sqrt(sum_sq / static_cast<double>(n));
  report.message_count = message_count;
  report.bytes_on_air = message_count * kFrameSize;
  return report;
}

SimTime matched_budget_interval(std::uint64_t asmi_message_count, SimTime horizon) {
  if (asmi_message_count == 0) throw ZeroBudget("matched budget needs at least one message");
  return SimTime{horizon.millis() / asmi_message_count};
}

}  // namespace asmi
