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

// Test-only reference implementations. None of these call into the code
// paths they are used to check.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "asmi/grid.hpp"
#include "asmi/signal.hpp"

namespace asmi::testing {

/// CRC-8/0x07 via a 256-entry table whose entries come from GF(2)
/// polynomial long division by x^8 + x^2 + x + 1.
std::uint8_t crc8_table_oracle(std::span<const std::uint8_t> bytes);

/// Walks the sensor's tracking rule over every `step` milliseconds of
/// [0, horizon] and records each emitted quantum.
std::vector<Crossing> scan_crossings(const Signal& signal, double p0, double dp, SimTime horizon, SimTime step,
                                     TrackingMode mode);

/// Net level (sum of directions) of crossings at or before t.
std::int64_t level_at(const std::vector<Crossing>& crossings, SimTime t);

struct GoldenFrame {
  int version = 0;
  int msg_type = 0;
  std::uint32_t sensor_id = 0;
  std::uint32_t seq_no = 0;
  std::int32_t level_index = 0;
  std::string hex;
};

std::vector<GoldenFrame> load_golden_frames();

}  // namespace asmi::testing
