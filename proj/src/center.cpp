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

#include "asmi/center.hpp"

#include <algorithm>

#include "asmi/format.hpp"

namespace asmi {

namespace {

bool time_order(const TimelineEntry& a, const TimelineEntry& b) {
  if (a.estimated_event_time != b.estimated_event_time) return a.estimated_event_time < b.estimated_event_time;
  return a.seq_no < b.seq_no;
}

bool seq_order(const TimelineEntry& a, const TimelineEntry& b) { return a.seq_no < b.seq_no; }

}  // namespace

std::string_view to_string(IngestStatus status) {
  switch (status) {
    case IngestStatus::kAccepted: return "ACCEPTED";
    case IngestStatus::kDuplicate: return "DUPLICATE";
    case IngestStatus::kQuarantined: return "QUARANTINED";
    case IngestStatus::kMalformed: return "MALFORMED";
  }
  return "UNKNOWN";
}

Center::Center(SimTime nominal_radio_latency) : nominal_latency_(nominal_radio_latency) {}

void Center::register_router(std::uint32_t router_id, std::string location, std::int64_t sync_residual_ms) {
  routers_[router_id] = RouterRecord{std::move(location), sync_residual_ms};
}

std::vector<IngestStatus> Center::register_sensor(const SensorDescriptor& descriptor, std::string location,
                                                  SimTime registered_at) {
  if (sensors_.contains(descriptor.sensor_id)) {
    throw DuplicateRegistration("sensor " + std::to_string(descriptor.sensor_id) + " is already registered");
  }
  validate(descriptor);
  sensors_.emplace(descriptor.sensor_id, SensorRecord{descriptor, std::move(location), registered_at, {}, {}});

  std::vector<IngestStatus> replayed;
  auto held = quarantine_.find(descriptor.sensor_id);
  if (held == quarantine_.end()) return replayed;
  std::vector<ForwardedRecord> records = std::move(held->second);
  quarantine_.erase(held);
  counts_.quarantined -= records.size();
  for (const auto& rec : records) replayed.push_back(ingest(rec));
  return replayed;
}

SimTime Center::corrected_time(const ForwardedRecord& record) const {
  std::int64_t residual = 0;
  if (auto it = routers_.find(record.router_id); it != routers_.end()) residual = it->second.sync_residual_ms;
  const std::int64_t estimate = static_cast<std::int64_t>(record.local_receipt_time.millis()) - residual -
                                static_cast<std::int64_t>(nominal_latency_.millis());
  return SimTime{static_cast<std::uint64_t>(std::max<std::int64_t>(estimate, 0))};
}

IngestStatus Center::ingest(const ForwardedRecord& record) {
  const DecodeResult decoded = try_decode(record.bytes);
  if (!decoded.ok()) {
    ++counts_.malformed;
    return IngestStatus::kMalformed;
  }
  if (!sensors_.contains(decoded.frame.sensor_id)) {
    quarantine_[decoded.frame.sensor_id].push_back(record);
    ++counts_.quarantined;
    return IngestStatus::kQuarantined;
  }
  return ingest_decoded(decoded.frame, corrected_time(record));
}

IngestStatus Center::ingest_decoded(const PiFrame& frame, SimTime estimate) {
  SensorRecord& s = sensors_.at(frame.sensor_id);
  const TimelineEntry entry{estimate, frame.level_index, frame.msg_type, frame.seq_no};

  auto seq_it = std::lower_bound(s.by_seq.begin(), s.by_seq.end(), entry, seq_order);
  if (seq_it != s.by_seq.end() && seq_it->seq_no == frame.seq_no) {
    ++counts_.duplicate;
    if (estimate < seq_it->estimated_event_time) {
      auto old = std::lower_bound(s.by_time.begin(), s.by_time.end(), *seq_it, time_order);
      s.by_time.erase(old);
      seq_it->estimated_event_time = estimate;
      s.by_time.insert(std::upper_bound(s.by_time.begin(), s.by_time.end(), *seq_it, time_order), *seq_it);
    }
    return IngestStatus::kDuplicate;
  }

  s.by_seq.insert(seq_it, entry);
  s.by_time.insert(std::upper_bound(s.by_time.begin(), s.by_time.end(), entry, time_order), entry);
  ++counts_.accepted;
  return IngestStatus::kAccepted;
}

const Center::SensorRecord& Center::sensor(std::uint32_t sensor_id) const {
  auto it = sensors_.find(sensor_id);
  if (it == sensors_.end()) throw UnknownSensor("sensor " + std::to_string(sensor_id) + " is not registered");
  return it->second;
}

double Center::halfwidth(const SensorRecord& s, std::vector<TimelineEntry>::const_iterator next,
                         std::uint32_t prev_seq) const {
  std::int64_t gap = 1;
  if (next != s.by_time.end()) {
    gap = std::max<std::int64_t>(1, static_cast<std::int64_t>(next->seq_no) - static_cast<std::int64_t>(prev_seq));
  }
  return s.descriptor.dp * static_cast<double>(gap);
}

Reconstruction Center::reconstruct(std::uint32_t sensor_id, SimTime t) const {
  const SensorRecord& s = sensor(sensor_id);
  auto next = std::upper_bound(s.by_time.begin(), s.by_time.end(), t,
                               [](SimTime v, const TimelineEntry& e) { return v < e.estimated_event_time; });
  if (next == s.by_time.begin()) {
    // Nothing seen yet: hold the activation reference; a later frame with a
    // high seq_no widens the band by the frames we never saw.
    return Reconstruction{s.descriptor.p0, halfwidth(s, next, 0)};
  }
  const TimelineEntry& prev = *std::prev(next);
  return Reconstruction{s.descriptor.reference(prev.level_index), halfwidth(s, next, prev.seq_no)};
}

std::vector<SeriesPoint> Center::series(std::uint32_t sensor_id, SimTime t0, SimTime t1, SimTime step) const {
  if (t1 < t0) throw std::invalid_argument("series requires t0 <= t1");
  if (step == SimTime::zero()) throw std::invalid_argument("series step must be positive");
  sensor(sensor_id);
  std::vector<SeriesPoint> out;
  for (SimTime t = t0;; t += step) {
    const Reconstruction r = reconstruct(sensor_id, t);
    out.push_back(SeriesPoint{t, r.value, r.uncertainty_halfwidth});
    if (t1 - t < step) break;
  }
  return out;
}

std::vector<SeqRange> Center::detect_gaps(std::uint32_t sensor_id) const {
  const SensorRecord& s = sensor(sensor_id);
  std::vector<SeqRange> gaps;
  for (std::size_t i = 1; i < s.by_seq.size(); ++i) {
    const std::uint32_t a = s.by_seq[i - 1].seq_no;
    const std::uint32_t b = s.by_seq[i].seq_no;
    if (b - a > 1) gaps.push_back(SeqRange{a + 1, b - 1});
  }
  return gaps;
}

Liveness Center::liveness(std::uint32_t sensor_id, SimTime now) const {
  const SensorRecord& s = sensor(sensor_id);
  const SimTime last = s.by_time.empty() ? s.registered_at : s.by_time.back().estimated_event_time;
  const SimTime allowance = s.descriptor.status_interval * 2;
  return (now > last && now - last > allowance) ? Liveness::kSilent : Liveness::kOk;
}

const std::vector<TimelineEntry>& Center::timeline(std::uint32_t sensor_id) const {
  return sensor(sensor_id).by_time;
}

const SensorDescriptor& Center::descriptor(std::uint32_t sensor_id) const { return sensor(sensor_id).descriptor; }

std::vector<std::uint32_t> Center::sensor_ids() const {
  std::vector<std::uint32_t> ids;
  ids.reserve(sensors_.size());
  for (const auto& [id, _] : sensors_) ids.push_back(id);
  return ids;
}

std::size_t Center::quarantine_size() const {
  std::size_t n = 0;
  for (const auto& [_, records] : quarantine_) n += records.size();
  return n;
}

void Center::write_timeline_csv(std::ostream& os) const {
  os << "sensor_id,seq_no,msg_type,estimated_event_time_ms,level_index,value,uncertainty\n";
  for (const auto& [id, s] : sensors_) {
    for (auto it = s.by_time.begin(); it != s.by_time.end(); ++it) {
      os << id << ',' << it->seq_no << ',' << to_string(it->msg_type) << ',' << it->estimated_event_time.millis()
         << ',' << it->level_index << ',' << format_double(s.descriptor.reference(it->level_index)) << ','
         << format_double(halfwidth(s, std::next(it), it->seq_no)) << '\n';
    }
  }
}

}  // namespace asmi
