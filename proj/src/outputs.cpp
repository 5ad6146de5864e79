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

#include "asmi/outputs.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>

#include "asmi/format.hpp"

namespace asmi {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw OutputError("cannot open " + path.string() + " for writing");
  return out;
}

void finish(std::ofstream& out, const fs::path& path) {
  out.flush();
  if (!out) throw OutputError("failed writing " + path.string());
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  return cells;
}

}  // namespace

std::string transport_line(const ForwardedRecord& record) {
  std::string line = "{\"router_id\":" + std::to_string(record.router_id) +
                     ",\"local_receipt_time_ms\":" + std::to_string(record.local_receipt_time.millis()) +
                     ",\"frame_hex\":\"" + to_hex(record.bytes) + "\"}";
  return line;
}

void write_comparison_csv(std::ostream& os, const std::vector<ComparisonRow>& rows) {
  os << "scenario_id,pipeline,sensor_id,sup,mean,rmse,messages,bytes\n";
  for (const auto& r : rows) {
    os << r.scenario_id << ',' << r.pipeline << ',' << r.sensor_id << ',' << format_double(r.report.sup_abs_error)
       << ',' << format_double(r.report.mean_abs_error) << ',' << format_double(r.report.rmse) << ','
       << r.report.message_count << ',' << r.report.bytes_on_air << '\n';
  }
}

json summary_json(const Scenario& scenario, const RunResult& result) {
  const RunSummary& s = result.summary;
  json counts = {
      {"frames_emitted", s.frames_emitted}, {"events_emitted", s.events_emitted},
      {"status_emitted", s.status_emitted}, {"emitted", s.emitted},
      {"delivered", s.delivered},           {"radio_lost", s.radio_lost},
      {"dropped", s.dropped},               {"forwarded", s.forwarded},
      {"accepted", s.accepted},             {"deduped", s.deduped},
      {"quarantined", s.quarantined},       {"malformed", s.malformed},
  };
  std::map<std::uint32_t, const SensorPlacement*> placements;
  for (const auto& sp : scenario.sensors) placements[sp.descriptor.sensor_id] = &sp;

  json sensors = json::array();
  for (const auto& o : result.sensors) {
    const SensorDescriptor& d = placements.at(o.sensor_id)->descriptor;
    sensors.push_back({
        {"sensor_id", o.sensor_id},
        {"parameter", d.parameter},
        {"unit", d.unit},
        {"dP", d.dp},
        {"P0", d.p0},
        {"events_emitted", o.events_emitted},
        {"status_emitted", o.status_emitted},
        {"missing_frames", o.missing_frames},
        {"gap_ranges", o.gap_ranges},
        {"liveness", o.liveness == Liveness::kOk ? "OK" : "SILENT"},
    });
  }
  return json{
      {"scenario_id", scenario.scenario_id},
      {"seed", scenario.seed},
      {"horizon_ms", scenario.horizon.millis()},
      {"counts", counts},
      {"sensors", sensors},
  };
}

RunResult run_scenario(const Scenario& scenario, const fs::path& out_dir) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw OutputError("cannot create output directory " + out_dir.string() + ": " + ec.message());

  const fs::path transport_path = out_dir / kTransportFile;
  std::ofstream transport = open_output(transport_path);

  Simulation sim(scenario);
  sim.on_forward([&transport](const ForwardedRecord& rec) { transport << transport_line(rec) << '\n'; });
  sim.run();
  finish(transport, transport_path);

  RunResult result;
  result.summary = sim.summary();
  result.sensors = sim.sensor_outcomes();
  result.comparison = sim.comparison();

  const fs::path timeline_path = out_dir / kTimelineFile;
  std::ofstream timeline = open_output(timeline_path);
  sim.center().write_timeline_csv(timeline);
  finish(timeline, timeline_path);

  const fs::path comparison_path = out_dir / kComparisonFile;
  std::ofstream comparison = open_output(comparison_path);
  write_comparison_csv(comparison, result.comparison);
  finish(comparison, comparison_path);

  const fs::path summary_path = out_dir / kSummaryFile;
  std::ofstream summary = open_output(summary_path);
  summary << summary_json(scenario, result).dump(2) << '\n';
  finish(summary, summary_path);

  return result;
}

namespace {

// Six significant digits for the table; the bound lines keep full precision.
std::string short_number(const std::string& cell) {
  std::ostringstream os;
  os << std::setprecision(6) << std::stod(cell);
  return os.str();
}

}  // namespace

void report(const fs::path& out_dir, std::ostream& os) {
  const fs::path summary_path = out_dir / kSummaryFile;
  const fs::path comparison_path = out_dir / kComparisonFile;
  for (const auto& p : {summary_path, comparison_path}) {
    if (!fs::exists(p)) throw MissingOutputs("missing run output " + p.string());
  }

  std::ifstream summary_in(summary_path);
  const json summary = json::parse(summary_in);
  const json& counts = summary.at("counts");

  std::map<std::uint32_t, double> dp_of;
  for (const auto& s : summary.at("sensors")) dp_of[s.at("sensor_id").get<std::uint32_t>()] = s.at("dP").get<double>();

  os << "Scenario " << summary.at("scenario_id").get<std::string>() << " (seed " << summary.at("seed")
     << ", horizon " << summary.at("horizon_ms") << " ms)\n\n";

  os << std::left << std::setw(10) << "sensor" << std::setw(10) << "pipeline" << std::right << std::setw(14)
     << "sup" << std::setw(14) << "mean" << std::setw(14) << "rmse" << std::setw(10) << "messages" << std::setw(10)
     << "bytes" << '\n';

  std::ifstream comparison_in(comparison_path);
  std::string line;
  std::getline(comparison_in, line);  // header
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> totals;
  std::vector<std::string> bound_lines;
  while (std::getline(comparison_in, line)) {
    if (line.empty()) continue;
    const auto cells = split_csv(line);
    if (cells.size() != 8) throw MissingOutputs("malformed comparison row: " + line);
    os << std::left << std::setw(10) << cells[2] << std::setw(10) << cells[1] << std::right << std::setw(14)
       << short_number(cells[3]) << std::setw(14) << short_number(cells[4]) << std::setw(14)
       << short_number(cells[5]) << std::setw(10) << cells[6] << std::setw(10) << cells[7] << '\n';
    auto& t = totals[cells[1]];
    t.first += std::stoull(cells[6]);
    t.second += std::stoull(cells[7]);
    if (cells[1] == "ASMI") {
      const auto id = static_cast<std::uint32_t>(std::stoul(cells[2]));
      const double sup = std::stod(cells[3]);
      const double dp = dp_of.at(id);
      bound_lines.push_back("sensor " + cells[2] + ": ASMI sup error " + cells[3] + (sup < dp ? " < " : " >= ") +
                            "dP " + format_double(dp));
    }
  }

  os << '\n';
  for (const auto& l : bound_lines) os << l << '\n';

  os << "\nTotals\n";
  for (const auto& [pipeline, t] : totals) {
    os << "  " << pipeline << " messages " << t.first << ", bytes " << t.second << '\n';
  }
  os << "  ASMI events " << counts.at("events_emitted") << ", status " << counts.at("status_emitted") << '\n';
  os << "  emitted " << counts.at("emitted") << ", delivered " << counts.at("delivered") << ", radio_lost "
     << counts.at("radio_lost") << ", dropped " << counts.at("dropped") << '\n';
  os << "  accepted " << counts.at("accepted") << ", deduped " << counts.at("deduped") << ", quarantined "
     << counts.at("quarantined") << ", malformed " << counts.at("malformed") << '\n';

  std::size_t silent = 0;
  for (const auto& s : summary.at("sensors")) silent += s.at("liveness") == "SILENT" ? 1 : 0;
  os << "  silent sensors " << silent << '\n';
}

}  // namespace asmi
