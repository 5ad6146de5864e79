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
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "asmi/pi_frame.hpp"
#include "asmi/sim_time.hpp"

namespace asmi {

/// A frame as the router hands it to the center. The bytes are opaque to
/// the router; only their length has been checked.
struct ForwardedRecord {
  std::uint32_t router_id = 0;
  FrameBytes bytes{};
  SimTime local_receipt_time;

  bool operator==(const ForwardedRecord&) const = default;
};

struct RouterConfig {
  std::uint32_t router_id = 0;
  std::string location;
  SimTime flush_interval = SimTime::seconds(60);
  double drift_ppm = 0.0;
  std::int64_t sync_residual_ms = 0;  // clock offset left behind by each sync
};

class ClockUnderflow : public std::range_error {
public:
  using std::range_error::range_error;
};

/// Store-and-forward node with a drifting local clock.
///
/// Until the first explicit sync the router behaves as if it had been synced
/// at time zero.
class Router {
public:
  explicit Router(RouterConfig config);

  const RouterConfig& config() const { return config_; }
  std::uint32_t id() const { return config_.router_id; }

  /// true_t + offset + drift_ppm * (true_t - last_sync) / 1e6, rounded to the
  /// nearest millisecond. Requires true_t >= last sync time.
  SimTime local_clock(SimTime true_t) const;

  /// Buffers a 14-byte frame stamped with the local clock. Anything else is
  /// dropped and counted.
  void receive(std::span<const std::uint8_t> bytes, SimTime true_t);

  /// Hands over and clears the whole buffer.
  std::vector<ForwardedRecord> flush();

  void apply_time_sync(SimTime center_true_time);

  std::int64_t clock_offset_ms() const { return clock_offset_ms_; }
  SimTime last_sync_true_time() const { return last_sync_; }
  std::size_t buffered() const { return buffer_.size(); }
  std::uint64_t received() const { return received_; }
  std::uint64_t dropped() const { return dropped_; }
  std::uint64_t forwarded() const { return forwarded_; }

private:
  RouterConfig config_;
  std::int64_t clock_offset_ms_;
  SimTime last_sync_{};
  std::vector<ForwardedRecord> buffer_;
  std::uint64_t received_ = 0;
  std::uint64_t dropped_ = 0;
  std::uint64_t forwarded_ = 0;
};

}  // namespace asmi
