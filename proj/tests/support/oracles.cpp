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

#include "oracles.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace asmi::testing {

namespace {

std::array<std::uint8_t, 256> build_table() {
  std::array<std::uint8_t, 256> table{};
  for (std::uint32_t i = 0; i < 256; ++i) {
    // Remainder of i(x) * x^8 modulo 0x107.
    std::uint32_t v = i << 8;
    for (int bit = 15; bit >= 8; --bit) {
      if (v & (1u << bit)) v ^= 0x107u << (bit - 8);
    }
    table[i] = static_cast<std::uint8_t>(v);
  }
  return table;
}

}  // namespace

std::uint8_t crc8_table_oracle(std::span<const std::uint8_t> bytes) {
  static const auto table = build_table();
  std::uint8_t crc = 0;
  for (std::uint8_t b : bytes) crc = table[crc ^ b];
  return crc;
}

std::vector<Crossing> scan_crossings(const Signal& signal, double p0, double dp, SimTime horizon, SimTime step,
                                     TrackingMode mode) {
  std::vector<Crossing> out;
  std::int64_t k = 0;
  for (std::uint64_t ms = 0; ms <= horizon.millis(); ms += step.millis()) {
    const double p = signal.value_at(SimTime{ms});
    while (p >= p0 + static_cast<double>(k + 1) * dp) {
      ++k;
      out.push_back({SimTime{ms}, +1});
    }
    if (mode == TrackingMode::kMonotonic) continue;
    while (p <= p0 + static_cast<double>(k - 1) * dp) {
      --k;
      out.push_back({SimTime{ms}, -1});
    }
  }
  return out;
}

std::int64_t level_at(const std::vector<Crossing>& crossings, SimTime t) {
  std::int64_t level = 0;
  for (const auto& c : crossings) {
    if (c.t > t) break;
    level += c.direction;
  }
  return level;
}

std::vector<GoldenFrame> load_golden_frames() {
  std::ifstream in(ASMI_FIXTURE_DIR "/golden_frames.txt");
  if (!in) throw std::runtime_error("missing golden_frames.txt fixture");
  std::vector<GoldenFrame> frames;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    GoldenFrame g;
    std::int64_t level = 0;
    ss >> g.version >> g.msg_type >> g.sensor_id >> g.seq_no >> level >> g.hex;
    g.level_index = static_cast<std::int32_t>(level);
    frames.push_back(g);
  }
  return frames;
}

}  // namespace asmi::testing
