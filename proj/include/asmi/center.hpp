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
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "asmi/pi_frame.hpp"
#include "asmi/router.hpp"
#include "asmi/sensor.hpp"
#include "asmi/sim_time.hpp"

namespace asmi {

enum class IngestStatus {
  kAccepted,
  kDuplicate,
  kQuarantined,
  kMalformed,
};

std::string_view to_string(IngestStatus status);

enum class Liveness {
  kOk,
  kSilent,
};

class DuplicateRegistration : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class UnknownSensor : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

struct TimelineEntry {
  SimTime estimated_event_time;
  std::int32_t level_index = 0;
  MsgType msg_type = MsgType::kEvent;
  std::uint32_t seq_no = 0;

  bool operator==(const TimelineEntry&) const = default;
};

struct Reconstruction {
  double value = 0.0;
  double uncertainty_halfwidth = 0.0;
};

struct SeriesPoint {
  SimTime t;
  double value = 0.0;
  double uncertainty = 0.0;
};

/// Inclusive range of sequence numbers never seen.
struct SeqRange {
  std::uint32_t first = 0;
  std::uint32_t last = 0;

  bool operator==(const SeqRange&) const = default;
};

/// Outcome tally. A quarantined record that is later replayed moves from
/// `quarantined` to whatever its replay produced, so the four fields always
/// add up to the number of records ingested.
struct IngestCounts {
  std::uint64_t accepted = 0;
  std::uint64_t duplicate = 0;
  std::uint64_t quarantined = 0;
  std::uint64_t malformed = 0;

  std::uint64_t total() const { return accepted + duplicate + quarantined + malformed; }
};

/// Monitoring Center: registry, deduplication, receipt-time correction and
/// zero-order-hold reconstruction of each registered sensor's parameter.
///
/// The estimated event time of a frame is
///   local_receipt_time - router sync residual - nominal radio latency
/// clamped at zero; among duplicates the earliest estimate is kept.
class Center {
public:
  explicit Center(SimTime nominal_radio_latency = SimTime{50});

  void register_router(std::uint32_t router_id, std::string location, std::int64_t sync_residual_ms);

  /// Replays any quarantined records of this sensor in receipt order and
  /// returns their outcomes.
  std::vector<IngestStatus> register_sensor(const SensorDescriptor& descriptor, std::string location,
                                            SimTime registered_at = SimTime::zero());

  IngestStatus ingest(const ForwardedRecord& record);

  Reconstruction reconstruct(std::uint32_t sensor_id, SimTime t) const;
  std::vector<SeriesPoint> series(std::uint32_t sensor_id, SimTime t0, SimTime t1, SimTime step) const;
  std::vector<SeqRange> detect_gaps(std::uint32_t sensor_id) const;
  Liveness liveness(std::uint32_t sensor_id, SimTime now) const;

  /// Accepted records of one sensor ordered by (estimated time, seq_no).
  const std::vector<TimelineEntry>& timeline(std::uint32_t sensor_id) const;
  const SensorDescriptor& descriptor(std::uint32_t sensor_id) const;
  std::vector<std::uint32_t> sensor_ids() const;
  bool is_registered(std::uint32_t sensor_id) const { return sensors_.contains(sensor_id); }
  std::size_t quarantine_size() const;

  const IngestCounts& counts() const { return counts_; }

  /// CSV columns: sensor_id, seq_no, msg_type, estimated_event_time_ms,
  /// level_index, value, uncertainty. Sensors ascending, rows in timeline
  /// order.
  void write_timeline_csv(std::ostream& os) const;

private:
  struct SensorRecord {
    SensorDescriptor descriptor;
    std::string location;
    SimTime registered_at;
    std::vector<TimelineEntry> by_seq;
    std::vector<TimelineEntry> by_time;
  };
  struct RouterRecord {
    std::string location;
    std::int64_t sync_residual_ms = 0;
  };

  const SensorRecord& sensor(std::uint32_t sensor_id) const;
  SimTime corrected_time(const ForwardedRecord& record) const;
  IngestStatus ingest_decoded(const PiFrame& frame, SimTime estimate);
  double halfwidth(const SensorRecord& s, std::vector<TimelineEntry>::const_iterator next,
                   std::uint32_t prev_seq) const;

  SimTime nominal_latency_;
  std::map<std::uint32_t, SensorRecord> sensors_;
  std::map<std::uint32_t, RouterRecord> routers_;
  std::map<std::uint32_t, std::vector<ForwardedRecord>> quarantine_;
  IngestCounts counts_;
};

}  // namespace asmi
