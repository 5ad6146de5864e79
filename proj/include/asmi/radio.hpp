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
#include <stdexcept>
#include <vector>

#include "asmi/pi_frame.hpp"
#include "asmi/rng.hpp"
#include "asmi/sim_time.hpp"

namespace asmi {

class UncoveredSensor : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/// Which routers hear which sensor. Router lists are kept sorted and unique.
class CoverageMap {
public:
  void cover(std::uint32_t sensor_id, std::uint32_t router_id);
  bool covers(std::uint32_t sensor_id) const;
  const std::vector<std::uint32_t>& routers(std::uint32_t sensor_id) const;
  const std::map<std::uint32_t, std::vector<std::uint32_t>>& entries() const { return routers_; }

private:
  std::map<std::uint32_t, std::vector<std::uint32_t>> routers_;
};

struct ChannelSpec {
  double loss_prob = 0.0;
  SimTime latency = SimTime{50};
  SimTime jitter{};  // uniform extra delay in [0, jitter], off when zero
};

struct Delivery {
  std::uint32_t router_id = 0;
  SimTime at;

  bool operator==(const Delivery&) const = default;
};

/// Broadcast channel with independent Bernoulli loss per (frame, router).
///
/// Each sensor owns a random stream derived from (seed, "radio", sensor_id).
/// A broadcast draws once per covering router, in ascending router order,
/// whether or not the loss probability is zero.
class Radio {
public:
  Radio(CoverageMap coverage, ChannelSpec channel, std::uint64_t seed);

  std::vector<Delivery> broadcast(const PiFrame& frame, std::uint32_t sensor_id, SimTime t);

  const CoverageMap& coverage() const { return coverage_; }
  const ChannelSpec& channel() const { return channel_; }
  std::uint64_t attempts() const { return attempts_; }
  std::uint64_t lost() const { return lost_; }
  std::uint64_t delivered() const { return attempts_ - lost_; }

private:
  RandomStream& stream_for(std::uint32_t sensor_id);

  CoverageMap coverage_;
  ChannelSpec channel_;
  std::uint64_t seed_;
  std::map<std::uint32_t, RandomStream> streams_;
  std::uint64_t attempts_ = 0;
  std::uint64_t lost_ = 0;
};

}  // namespace asmi
