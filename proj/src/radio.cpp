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

#include "asmi/radio.hpp"

#include <algorithm>
#include <string>

namespace asmi {

void CoverageMap::cover(std::uint32_t sensor_id, std::uint32_t router_id) {
  auto& list = routers_[sensor_id];
  auto it = std::lower_bound(list.begin(), list.end(), router_id);
  if (it == list.end() || *it != router_id) list.insert(it, router_id);
}

bool CoverageMap::covers(std::uint32_t sensor_id) const {
  auto it = routers_.find(sensor_id);
  return it != routers_.end() && !it->second.empty();
}

const std::vector<std::uint32_t>& CoverageMap::routers(std::uint32_t sensor_id) const {
  auto it = routers_.find(sensor_id);
  if (it == routers_.end() || it->second.empty()) {
    throw UncoveredSensor("sensor " + std::to_string(sensor_id) + " is not covered by any router");
  }
  return it->second;
}

Radio::Radio(CoverageMap coverage, ChannelSpec channel, std::uint64_t seed)
    : coverage_(std::move(coverage)), channel_(channel), seed_(seed) {
  if (!(channel_.loss_prob >= 0.0 && channel_.loss_prob <= 1.0)) {
    throw std::invalid_argument("loss_prob must lie in [0, 1]");
  }
}

RandomStream& Radio::stream_for(std::uint32_t sensor_id) {
  auto it = streams_.find(sensor_id);
  if (it == streams_.end()) {
    it = streams_.emplace(sensor_id, RandomStream(stream_seed(seed_, "radio", sensor_id))).first;
  }
  return it->second;
}

std::vector<Delivery> Radio::broadcast(const PiFrame& /*frame*/, std::uint32_t sensor_id, SimTime t) {
  const auto& routers = coverage_.routers(sensor_id);
  RandomStream& rng = stream_for(sensor_id);
  std::vector<Delivery> out;
  out.reserve(routers.size());
  for (std::uint32_t router_id : routers) {
    ++attempts_;
    const bool lost = uniform01(rng) < channel_.loss_prob;
    SimTime at = t + channel_.latency;
    if (channel_.jitter > SimTime::zero()) {
      at += SimTime{rng() % (channel_.jitter.millis() + 1)};
    }
    if (lost) {
      ++lost_;
      continue;
    }
    out.push_back(Delivery{router_id, at});
  }
  return out;
}

}  // namespace asmi
