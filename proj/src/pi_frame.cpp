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

#include "asmi/pi_frame.hpp"

#include <string>

namespace asmi {

namespace {

void put_be32(std::uint8_t* out, std::uint32_t v) {
  out[0] = static_cast<std::uint8_t>(v >> 24);
  out[1] = static_cast<std::uint8_t>(v >> 16);
  out[2] = static_cast<std::uint8_t>(v >> 8);
  out[3] = static_cast<std::uint8_t>(v);
}

std::uint32_t get_be32(const std::uint8_t* in) {
  return (std::uint32_t{in[0]} << 24) | (std::uint32_t{in[1]} << 16) | (std::uint32_t{in[2]} << 8) |
         std::uint32_t{in[3]};
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string_view to_string(MsgType type) {
  switch (type) {
    case MsgType::kEvent: return "EVENT";
    case MsgType::kStatus: return "STATUS";
  }
  return "UNKNOWN";
}

std::string_view to_string(DecodeStatus status) {
  switch (status) {
    case DecodeStatus::kOk: return "ok";
    case DecodeStatus::kBadLength: return "bad length";
    case DecodeStatus::kBadCrc: return "bad crc";
    case DecodeStatus::kUnknownVersion: return "unknown version";
    case DecodeStatus::kUnknownType: return "unknown type";
  }
  return "unknown";
}

FrameDecodeError::FrameDecodeError(DecodeStatus status)
    : std::runtime_error("frame decode failed: " + std::string(to_string(status))), status_(status) {}

std::uint8_t crc8(std::span<const std::uint8_t> bytes) {
  std::uint8_t crc = 0x00;
  for (std::uint8_t b : bytes) {
    crc ^= b;
    for (int bit = 0; bit < 8; ++bit) {
      crc = (crc & 0x80) ? static_cast<std::uint8_t>((crc << 1) ^ 0x07) : static_cast<std::uint8_t>(crc << 1);
    }
  }
  return crc;
}

FrameBytes encode(const PiFrame& frame) {
  if (frame.version != kFrameVersion) {
    throw InvalidHeader("unsupported frame version " + std::to_string(frame.version));
  }
  if (frame.msg_type != MsgType::kEvent && frame.msg_type != MsgType::kStatus) {
    throw InvalidHeader("unsupported message type " + std::to_string(static_cast<int>(frame.msg_type)));
  }
  FrameBytes out{};
  out[0] = static_cast<std::uint8_t>((frame.version << 4) | static_cast<std::uint8_t>(frame.msg_type));
  put_be32(&out[1], frame.sensor_id);
  put_be32(&out[5], frame.seq_no);
  put_be32(&out[9], static_cast<std::uint32_t>(frame.level_index));
  out[13] = crc8(std::span<const std::uint8_t>(out.data(), kFrameSize - 1));
  return out;
}

DecodeResult try_decode(std::span<const std::uint8_t> bytes) {
  DecodeResult result;
  if (bytes.size() != kFrameSize) {
    result.status = DecodeStatus::kBadLength;
    return result;
  }
  if (crc8(bytes.first(kFrameSize - 1)) != bytes[13]) {
    result.status = DecodeStatus::kBadCrc;
    return result;
  }
  const std::uint8_t version = bytes[0] >> 4;
  const std::uint8_t type = bytes[0] & 0x0F;
  if (version != kFrameVersion) {
    result.status = DecodeStatus::kUnknownVersion;
    return result;
  }
  if (type != static_cast<std::uint8_t>(MsgType::kEvent) && type != static_cast<std::uint8_t>(MsgType::kStatus)) {
    result.status = DecodeStatus::kUnknownType;
    return result;
  }
  result.frame.version = version;
  result.frame.msg_type = static_cast<MsgType>(type);
  result.frame.sensor_id = get_be32(&bytes[1]);
  result.frame.seq_no = get_be32(&bytes[5]);
  result.frame.level_index = static_cast<std::int32_t>(get_be32(&bytes[9]));
  return result;
}

PiFrame decode(std::span<const std::uint8_t> bytes) {
  DecodeResult r = try_decode(bytes);
  if (!r.ok()) throw FrameDecodeError(r.status);
  return r.frame;
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0x0F]);
  }
  return out;
}

std::vector<std::uint8_t> from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw std::invalid_argument("hex string has odd length");
  std::vector<std::uint8_t> out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    const int hi = hex_digit(hex[i]);
    const int lo = hex_digit(hex[i + 1]);
    if (hi < 0 || lo < 0) throw std::invalid_argument("non-hex character in hex string");
    out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
  }
  return out;
}

}  // namespace asmi
