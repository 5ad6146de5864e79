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

#include "asmi/router.hpp"

#include <algorithm>
#include <cmath>

namespace asmi {

Router::Router(RouterConfig config) : config_(std::move(config)), clock_offset_ms_(config_.sync_residual_ms) {
  if (config_.flush_interval == SimTime::zero()) throw std::invalid_argument("flush_interval must be positive");
  if (!std::isfinite(config_.drift_ppm) || std::abs(config_.drift_ppm) >= 1e6) {
    throw std::invalid_argument("drift_ppm must be finite and within (-1e6, 1e6)");
  }
}

SimTime Router::local_clock(SimTime true_t) const {
  if (true_t < last_sync_) throw std::invalid_argument("local_clock queried before the last sync");
  const double since_sync = static_cast<double>((true_t - last_sync_).millis());
  const auto drift = static_cast<std::int64_t>(std::llround(config_.drift_ppm * since_sync / 1e6));
  const std::int64_t local = static_cast<std::int64_t>(true_t.millis()) + clock_offset_ms_ + drift;
  if (local < 0) throw ClockUnderflow("router " + std::to_string(config_.router_id) + " clock reads negative");
  return SimTime{static_cast<std::uint64_t>(local)};
}

void Router::receive(std::span<const std::uint8_t> bytes, SimTime true_t) {
  ++received_;
  if (bytes.size() != kFrameSize) {
    ++dropped_;
    return;
  }
  ForwardedRecord rec;
  rec.router_id = config_.router_id;
  std::copy(bytes.begin(), bytes.end(), rec.bytes.begin());
  rec.local_receipt_time = local_clock(true_t);
  buffer_.push_back(rec);
}

std::vector<ForwardedRecord> Router::flush() {
  std::vector<ForwardedRecord> batch;
  batch.swap(buffer_);
  forwarded_ += batch.size();
  return batch;
}

void Router::apply_time_sync(SimTime center_true_time) {
  clock_offset_ms_ = config_.sync_residual_ms;
  last_sync_ = center_true_time;
}

}  // namespace asmi
