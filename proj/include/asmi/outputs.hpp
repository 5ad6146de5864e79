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

#include <filesystem>
#include <ostream>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "asmi/scenario.hpp"
#include "asmi/simulation.hpp"

namespace asmi {

// Output files of a run, all written into one directory:
//
//   timeline.csv     sensor_id,seq_no,msg_type,estimated_event_time_ms,level_index,value,uncertainty
//   transport.jsonl  {"router_id":..,"local_receipt_time_ms":..,"frame_hex":".."} per forwarded record
//   comparison.csv   scenario_id,pipeline,sensor_id,sup,mean,rmse,messages,bytes
//   run_summary.json counts plus per-sensor outcomes
//
// Identical scenario and seed give byte-identical files.

inline constexpr const char* kTimelineFile = "timeline.csv";
inline constexpr const char* kTransportFile = "transport.jsonl";
inline constexpr const char* kComparisonFile = "comparison.csv";
inline constexpr const char* kSummaryFile = "run_summary.json";

class OutputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class MissingOutputs : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct RunResult {
  RunSummary summary;
  std::vector<SensorOutcome> sensors;
  std::vector<ComparisonRow> comparison;
};

std::string transport_line(const ForwardedRecord& record);
void write_comparison_csv(std::ostream& os, const std::vector<ComparisonRow>& rows);
nlohmann::json summary_json(const Scenario& scenario, const RunResult& result);

/// Runs the scenario end to end and writes the four output files. Throws
/// OutputError when the directory or a file cannot be written.
RunResult run_scenario(const Scenario& scenario, const std::filesystem::path& out_dir);

/// Prints the per-sensor error table and pipeline totals of a finished run.
void report(const std::filesystem::path& out_dir, std::ostream& os);

}  // namespace asmi
