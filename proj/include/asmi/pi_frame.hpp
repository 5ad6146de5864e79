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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace asmi {

// Wire layout, 14 bytes, big-endian:
//
//   [0]      version << 4 | msg_type
//   [1..4]   sensor_id
//   [5..8]   seq_no
//   [9..12]  level_index (two's complement)
//   [13]     CRC-8, poly 0x07, init 0x00, no reflection, no final XOR, over [0..12]
inline constexpr std::size_t kFrameSize = 14;
inline constexpr std::uint8_t kFrameVersion = 1;

using FrameBytes = std::array<std::uint8_t, kFrameSize>;

enum class MsgType : std::uint8_t {
  kEvent = 1,
  kStatus = 2,
};

std::string_view to_string(MsgType type);

struct PiFrame {
  std::uint8_t version = kFrameVersion;
  MsgType msg_type = MsgType::kEvent;
  std::uint32_t sensor_id = 0;
  std::uint32_t seq_no = 0;
  std::int32_t level_index = 0;

  bool operator==(const PiFrame&) const = default;
};

enum class DecodeStatus {
  kOk,
  kBadLength,
  kBadCrc,
  kUnknownVersion,
  kUnknownType,
};

std::string_view to_string(DecodeStatus status);

class InvalidHeader : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class FrameDecodeError : public std::runtime_error {
public:
  explicit FrameDecodeError(DecodeStatus status);
  DecodeStatus status() const { return status_; }

private:
  DecodeStatus status_;
};

struct DecodeResult {
  DecodeStatus status = DecodeStatus::kOk;
  PiFrame frame;

  bool ok() const { return status == DecodeStatus::kOk; }
};

std::uint8_t crc8(std::span<const std::uint8_t> bytes);

/// Throws InvalidHeader unless version is 1 and msg_type is EVENT or STATUS.
FrameBytes encode(const PiFrame& frame);

/// Checks run in order length, CRC, version, type; the first failure wins.
DecodeResult try_decode(std::span<const std::uint8_t> bytes);

/// Like try_decode but throws FrameDecodeError on failure.
PiFrame decode(std::span<const std::uint8_t> bytes);

std::string to_hex(std::span<const std::uint8_t> bytes);

/// Accepts upper or lower case; throws std::invalid_argument on odd length
/// or non-hex characters.
std::vector<std::uint8_t> from_hex(std::string_view hex);

}  // namespace asmi
