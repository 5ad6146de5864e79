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

// asmi validate --config PATH
// asmi run      --config PATH [--out DIR] [--seed N]
// asmi report   --out DIR

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "asmi/outputs.hpp"
#include "asmi/scenario.hpp"

namespace {

std::optional<asmi::Scenario> load(const std::string& path, std::optional<std::uint64_t> seed) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open config " << path << '\n';
    return std::nullopt;
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "error: " << path << " is not valid JSON: " << e.what() << '\n';
    return std::nullopt;
  }
  if (seed && doc.is_object()) doc["seed"] = *seed;

  asmi::ValidationResult result = asmi::validate(doc);
  for (const auto& e : result.errors) {
    std::cerr << path << ": " << (e.path.empty() ? "<root>" : e.path) << ": " << e.message << '\n';
  }
  return std::move(result.scenario);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ASMI send-on-delta monitoring simulator"};
  app.require_subcommand(1);

  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;

  auto* validate = app.add_subcommand("validate", "Check a scenario config and report every problem");
  validate->add_option("--config", config, "Scenario config (JSON)")->required();

  auto* run = app.add_subcommand("run", "Simulate a scenario and write timeline, transport log and reports");
  run->add_option("--config", config, "Scenario config (JSON)")->required();
  run->add_option("--out", out, "Output directory (defaults to the config's outputs field)");
  run->add_option("--seed", seed, "Override the scenario seed");

  auto* report = app.add_subcommand("report", "Summarise the outputs of a finished run");
  report->add_option("--out", out, "Output directory of the run")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) {
      auto scenario = load(config, std::nullopt);
      if (!scenario) return 1;
      std::cout << "ok: " << scenario->scenario_id << " (" << scenario->sensors.size() << " sensors, "
                << scenario->routers.size() << " routers)\n";
      return 0;
    }
    if (*run) {
      auto scenario = load(config, seed);
      if (!scenario) return 1;
      const std::string dir = out.empty() ? scenario->outputs : out;
      if (dir.empty()) {
        std::cerr << "error: no output directory (use --out or set outputs in the config)\n";
        return 1;
      }
      const asmi::RunResult result = asmi::run_scenario(*scenario, dir);
      const auto& s = result.summary;
      std::cout << scenario->scenario_id << ": emitted " << s.emitted << ", delivered " << s.delivered
                << ", deduped " << s.deduped << ", quarantined " << s.quarantined << ", malformed "
                << s.malformed << ", dropped " << s.dropped << " -> " << dir << '\n';
      return 0;
    }
    if (*report) {
      asmi::report(out, std::cout);
      return 0;
    }
  } catch (const asmi::MissingOutputs& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
