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

namespace asmi {

enum class TrackingMode {
  kMonotonic,
  kBidirectional,
};

// Reference grid P0 + k*dP. Every component that compares a value against
// the grid goes through these helpers so the sensor, the crossing search and
// the center agree bit-for-bit on floating point.

inline double grid_level(double p0, double dp, std::int64_t k) {
  return p0 + static_cast<double>(k) * dp;
}

// Compared against the neighbouring grid point itself. Testing p - ref >= dp
// instead would miss exact hits, e.g. 5.0 - 4.9 < 0.1 in binary floating point.
inline bool above_next_level(double p, double p0, double dp, std::int64_t k) { return p >= grid_level(p0, dp, k + 1); }

inline bool below_previous_level(double p, double p0, double dp, std::int64_t k) {
  return p <= grid_level(p0, dp, k - 1);
}

}  // namespace asmi
