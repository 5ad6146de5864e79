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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "asmi/outputs.hpp"
#include "scenarios.hpp"

using namespace asmi;
namespace fs = std::filesystem;

namespace {

struct Invocation {
  int exit_code = -1;
  std::string output;
};

Invocation cli(const std::string& args) {
  const fs::path log = fs::temp_directory_path() / "asmi_cli_test_output.txt";
  const std::string cmd = std::string(ASMI_CLI_PATH) + " " + args + " > " + log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, asmi::testing::slurp(log)};
}

std::string scenario(const std::string& name) { return asmi::testing::scenario_file(name + ".json").string(); }

Invocation run_to(const std::string& name, const fs::path& dir, const std::string& extra = "") {
  return cli("run --config " + scenario(name) + " --out " + dir.string() + " " + extra);
}

std::vector<std::vector<std::string>> read_csv(const fs::path& path) {
  std::ifstream in(path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST(Cli, ValidateAcceptsAndRejects) {
  EXPECT_EQ(cli("validate --config " + scenario("quiet_day")).exit_code, 0);

  const fs::path dir = asmi::testing::temp_dir("cli_invalid");
  auto doc = nlohmann::json::parse(asmi::testing::slurp(scenario("quiet_day")));
  doc["sensors"][1]["dP"] = 0;
  std::ofstream(dir / "bad.json") << doc.dump();
  const Invocation bad = cli("validate --config " + (dir / "bad.json").string());
  EXPECT_NE(bad.exit_code, 0);
  EXPECT_NE(bad.output.find("sensors[1].dP: dP must be positive"), std::string::npos) << bad.output;

  EXPECT_NE(cli("validate --config /nonexistent/config.json").exit_code, 0);
}

TEST(Cli, QuietDayTimelineHasOnlyStatusRows) {
  const fs::path dir = asmi::testing::temp_dir("cli_quiet");
  ASSERT_EQ(run_to("quiet_day", dir).exit_code, 0);
  const auto rows = read_csv(dir / kTimelineFile);
  ASSERT_GT(rows.size(), 1u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"sensor_id", "seq_no", "msg_type", "estimated_event_time_ms",
                                               "level_index", "value", "uncertainty"}));
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(rows[i][2], "STATUS");
  EXPECT_EQ(rows.size(), 1u + 4 + 4 + 6);

  const Invocation rep = cli("report --out " + dir.string());
  EXPECT_EQ(rep.exit_code, 0);
  EXPECT_NE(rep.output.find("ASMI events 0"), std::string::npos) << rep.output;
}

TEST(Cli, NoLossThreeRoutersDedupsTwoOfThree) {
  const fs::path dir = asmi::testing::temp_dir("cli_three");
  ASSERT_EQ(run_to("no_loss_three_routers", dir).exit_code, 0);
  const auto summary = nlohmann::json::parse(asmi::testing::slurp(dir / kSummaryFile));
  const auto& c = summary.at("counts");
  EXPECT_GT(c.at("accepted").get<std::uint64_t>(), 0u);
  EXPECT_EQ(c.at("deduped").get<std::uint64_t>(), 2 * c.at("accepted").get<std::uint64_t>());
  EXPECT_EQ(c.at("radio_lost").get<std::uint64_t>(), 0u);
  for (const auto& s : summary.at("sensors")) {
    EXPECT_EQ(s.at("gap_ranges").get<std::uint64_t>(), 0u);
    EXPECT_EQ(s.at("missing_frames").get<std::uint64_t>(), 0u);
  }
}

TEST(Cli, RerunIsByteIdentical) {
  const fs::path a = asmi::testing::temp_dir("cli_det_a");
  const fs::path b = asmi::testing::temp_dir("cli_det_b");
  ASSERT_EQ(run_to("mixed_city", a).exit_code, 0);
  ASSERT_EQ(run_to("mixed_city", b).exit_code, 0);
  for (const char* f : {kTimelineFile, kTransportFile, kComparisonFile, kSummaryFile}) {
    const std::string x = asmi::testing::slurp(a / f);
    EXPECT_FALSE(x.empty()) << f;
    EXPECT_EQ(std::hash<std::string>{}(x), std::hash<std::string>{}(asmi::testing::slurp(b / f))) << f;
  }
}

TEST(Cli, SeedOverrideChangesLossPattern) {
  const fs::path a = asmi::testing::temp_dir("cli_seed_a");
  const fs::path b = asmi::testing::temp_dir("cli_seed_b");
  ASSERT_EQ(run_to("mixed_city", a).exit_code, 0);
  ASSERT_EQ(run_to("mixed_city", b, "--seed 99").exit_code, 0);
  EXPECT_NE(asmi::testing::slurp(a / kTransportFile), asmi::testing::slurp(b / kTransportFile));
  const auto summary = nlohmann::json::parse(asmi::testing::slurp(b / kSummaryFile));
  EXPECT_EQ(summary.at("seed").get<std::uint64_t>(), 99u);
}

TEST(Cli, ConservationIdentityInSummary) {
  const fs::path dir = asmi::testing::temp_dir("cli_conserve");
  ASSERT_EQ(run_to("mixed_city", dir).exit_code, 0);
  const auto c = nlohmann::json::parse(asmi::testing::slurp(dir / kSummaryFile)).at("counts");
  auto n = [&](const char* k) { return c.at(k).get<std::uint64_t>(); };
  EXPECT_GT(n("radio_lost"), 0u);
  EXPECT_EQ(n("emitted"), n("delivered") + n("radio_lost"));
  EXPECT_EQ(n("delivered"), n("accepted") + n("deduped") + n("quarantined") + n("malformed") + n("dropped"));
  EXPECT_EQ(n("forwarded"), n("delivered"));

  std::ifstream transport(dir / kTransportFile);
  std::string line;
  std::uint64_t lines = 0;
  while (std::getline(transport, line)) {
    const auto rec = nlohmann::json::parse(line);
    EXPECT_EQ(rec.at("frame_hex").get<std::string>().size(), 28u);
    ++lines;
  }
  EXPECT_EQ(lines, n("forwarded"));
}

TEST(Cli, BurstReportShowsBoundLine) {
  const fs::path dir = asmi::testing::temp_dir("cli_burst");
  ASSERT_EQ(run_to("burst", dir).exit_code, 0);
  const Invocation rep = cli("report --out " + dir.string());
  EXPECT_EQ(rep.exit_code, 0);
  EXPECT_NE(rep.output.find("sensor 1: ASMI sup error"), std::string::npos) << rep.output;
  EXPECT_NE(rep.output.find("< dP 0.1"), std::string::npos) << rep.output;

  const auto rows = read_csv(dir / kComparisonFile);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"scenario_id", "pipeline", "sensor_id", "sup", "mean", "rmse",
                                               "messages", "bytes"}));
  EXPECT_EQ(rows[1][1], "ASMI");
  EXPECT_EQ(rows[2][1], "AMI");
  EXPECT_EQ(rows[1][6], rows[2][6]);
}

TEST(Cli, MissingOutputs) {
  const fs::path dir = fs::temp_directory_path() / "asmi_test_does_not_exist";
  fs::remove_all(dir);
  EXPECT_THROW(report(dir, std::cout), MissingOutputs);
  EXPECT_EQ(cli("report --out " + dir.string()).exit_code, 2);
}

TEST(Cli, LateRegistrationIsReplayed) {
  const fs::path dir = asmi::testing::temp_dir("cli_late");
  auto doc = nlohmann::json::parse(asmi::testing::slurp(scenario("mixed_city")));
  doc["channel"]["loss_prob"] = 0.0;
  std::ofstream(dir / "late.json") << doc.dump();
  ASSERT_EQ(cli("run --config " + (dir / "late.json").string() + " --out " + (dir / "out").string()).exit_code, 0);
  const auto summary = nlohmann::json::parse(asmi::testing::slurp(dir / "out" / kSummaryFile));
  for (const auto& s : summary.at("sensors")) {
    EXPECT_EQ(s.at("missing_frames").get<std::uint64_t>(), 0u) << s.at("sensor_id");
  }
  EXPECT_EQ(summary.at("counts").at("quarantined").get<std::uint64_t>(), 0u);
}
