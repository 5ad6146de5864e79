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

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>

#include "asmi/outputs.hpp"
#include "asmi/radio.hpp"
#include "asmi/router.hpp"
#include "asmi/simulation.hpp"
#include "scenarios.hpp"

using namespace asmi;

namespace {

Router make_router(double drift_ppm = 0.0, std::int64_t residual = 0) {
  RouterConfig c;
  c.router_id = 7;
  c.drift_ppm = drift_ppm;
  c.sync_residual_ms = residual;
  return Router(c);
}

FrameBytes frame_bytes(std::uint32_t sensor, std::uint32_t seq) {
  PiFrame f;
  f.sensor_id = sensor;
  f.seq_no = seq;
  f.level_index = static_cast<std::int32_t>(seq);
  return encode(f);
}

}  // namespace

TEST(RouterClock, IdentityWithoutOffsetOrDrift) {
  const Router r = make_router();
  for (std::uint64_t t : {0, 1, 12'345, 86'400'000}) EXPECT_EQ(r.local_clock(SimTime{t}), SimTime{t});
}

TEST(RouterClock, FixedOffset) {
  EXPECT_EQ(make_router(0.0, 200).local_clock(SimTime{1000}), SimTime{1200});
}

TEST(RouterClock, DriftAccumulates) {
  // 100 ppm over 10^7 ms is 1000 ms fast.
  EXPECT_EQ(make_router(100.0).local_clock(SimTime{10'000'000}), SimTime{10'001'000});
}

TEST(RouterClock, UnsyncedDayDrift) {
  const SimTime day = SimTime::hours(24);
  EXPECT_EQ(make_router(100.0).local_clock(day).millis() - day.millis(), 8'640u);
}

TEST(RouterClock, SyncResetsError) {
  Router r = make_router(100.0);
  r.apply_time_sync(SimTime{5'000'000});
  EXPECT_EQ(r.local_clock(SimTime{5'000'000}), SimTime{5'000'000});
  EXPECT_THROW(r.local_clock(SimTime{4'999'999}), std::invalid_argument);
}

TEST(RouterClock, PeriodicSyncBoundsError) {
  Router r = make_router(100.0);
  std::int64_t worst = 0;
  for (std::uint64_t t = 0; t <= 10'000'000; t += 1'000) {
    if (t > 0 && t % 1'000'000 == 0) r.apply_time_sync(SimTime{t});
    const auto err = static_cast<std::int64_t>(r.local_clock(SimTime{t}).millis()) - static_cast<std::int64_t>(t);
    worst = std::max(worst, std::abs(err));
  }
  EXPECT_EQ(worst, 100);
}

TEST(RouterClock, StrictlyIncreasingBetweenSyncs) {
  const Router r = make_router(-40.0, 3);
  SimTime prev = r.local_clock(SimTime{0});
  for (std::uint64_t t = 997; t <= 3'600'000; t += 997) {
    const SimTime now = r.local_clock(SimTime{t});
    ASSERT_GT(now, prev);
    prev = now;
  }
}

TEST(RouterReceive, BuffersValidFramesAndCountsGarbage) {
  Router r = make_router();
  const FrameBytes good = frame_bytes(1, 1);
  r.receive(good, SimTime{10});
  EXPECT_EQ(r.buffered(), 1u);
  const std::vector<std::uint8_t> garbage(7, 0xAB);
  r.receive(garbage, SimTime{11});
  EXPECT_EQ(r.buffered(), 1u);
  EXPECT_EQ(r.dropped(), 1u);
  EXPECT_EQ(r.received(), 2u);
}

TEST(RouterReceive, SameInstantKeepsArrivalOrder) {
  Router r = make_router();
  r.receive(frame_bytes(1, 1), SimTime{10});
  r.receive(frame_bytes(2, 1), SimTime{10});
  const auto batch = r.flush();
  ASSERT_EQ(batch.size(), 2u);
  EXPECT_EQ(batch[0].bytes, frame_bytes(1, 1));
  EXPECT_EQ(batch[1].bytes, frame_bytes(2, 1));
  EXPECT_EQ(batch[0].local_receipt_time, SimTime{10});
  EXPECT_EQ(batch[0].router_id, 7u);
}

TEST(RouterFlush, HandsOverWholeBuffer) {
  Router r = make_router();
  EXPECT_TRUE(r.flush().empty());
  for (std::uint32_t i = 1; i <= 5; ++i) r.receive(frame_bytes(1, i), SimTime{i});
  EXPECT_EQ(r.flush().size(), 5u);
  EXPECT_EQ(r.buffered(), 0u);
  r.receive(frame_bytes(1, 6), SimTime{6});
  const auto next = r.flush();
  ASSERT_EQ(next.size(), 1u);
  EXPECT_EQ(next[0].bytes, frame_bytes(1, 6));
  EXPECT_EQ(r.forwarded(), 6u);
}

// Forwarded bytes are exactly the delivered bytes, in delivery order, across
// arbitrarily placed flushes. Corrupt but well-sized bytes pass untouched.
TEST(RouterTransparency, ForwardsDeliveredBytesUnchanged) {
  std::mt19937_64 rng(3);
  CoverageMap m;
  for (std::uint32_t s = 1; s <= 5; ++s) m.cover(s, 7);
  Radio radio(m, ChannelSpec{0.3, SimTime{50}}, 12);
  Router r = make_router(25.0);
  std::vector<FrameBytes> delivered;
  std::vector<FrameBytes> forwarded;
  for (std::uint32_t i = 1; i <= 2000; ++i) {
    const std::uint32_t s = 1 + static_cast<std::uint32_t>(rng() % 5);
    PiFrame f;
    f.sensor_id = s;
    f.seq_no = i;
    FrameBytes bytes = encode(f);
    if (i % 97 == 0) bytes[13] ^= 0x40;
    for (const Delivery& d : radio.broadcast(f, s, SimTime{i * 10})) {
      r.receive(bytes, d.at);
      delivered.push_back(bytes);
    }
    if (rng() % 13 == 0) {
      for (const auto& rec : r.flush()) forwarded.push_back(rec.bytes);
    }
  }
  for (const auto& rec : r.flush()) forwarded.push_back(rec.bytes);
  EXPECT_EQ(forwarded, delivered);
}

TEST(RouterTransparency, EndToEndEveryCopyReachesTheCenter) {
  Scenario sc = asmi::testing::city(21, 30, 3, 2, 0.0, SimTime::hours(6));
  Simulation sim(sc);
  std::map<std::uint32_t, std::multiset<std::string>> expected;
  std::map<std::uint32_t, std::multiset<std::string>> seen;
  sim.on_emit([&](SimTime, const PiFrame& f) {
    for (std::uint32_t r : sc.coverage.routers(f.sensor_id)) expected[r].insert(to_hex(encode(f)));
  });
  sim.on_forward([&](const ForwardedRecord& rec) { seen[rec.router_id].insert(to_hex(rec.bytes)); });
  sim.run();
  EXPECT_FALSE(expected.empty());
  EXPECT_EQ(seen, expected);
}

// Relabelling which physical quantity each sensor measures leaves the
// transport byte-identical.
TEST(RouterAgnostic, TransportIgnoresParameterKinds) {
  const Scenario base = asmi::testing::city(5, 24, 3, 2, 0.2, SimTime::hours(8));
  Scenario relabelled = base;
  const char* kinds[] = {"electricity", "pm2_5", "air_temperature", "cold_water", "relative_humidity"};
  for (std::size_t i = 0; i < relabelled.sensors.size(); ++i) {
    relabelled.sensors[i].descriptor.parameter = kinds[(i + 2) % 5];
    relabelled.sensors[i].descriptor.unit = "unit" + std::to_string(i);
  }
  auto transport = [](const Scenario& sc) {
    Simulation sim(sc);
    std::string log;
    sim.on_forward([&](const ForwardedRecord& rec) { log += transport_line(rec) + "\n"; });
    sim.run();
    return log;
  };
  const std::string a = transport(base);
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, transport(relabelled));
}
