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

#include <random>
#include <vector>

#include "asmi/sensor.hpp"
#include "oracles.hpp"

using namespace asmi;

namespace {

SensorDescriptor descriptor(std::uint32_t id, double dp, double p0, TrackingMode mode,
                            SimTime status = SimTime::hours(6)) {
  SensorDescriptor d;
  d.sensor_id = id;
  d.dp = dp;
  d.p0 = p0;
  d.mode = mode;
  d.status_interval = status;
  return d;
}

std::vector<std::int32_t> levels(const std::vector<PiFrame>& frames) {
  std::vector<std::int32_t> out;
  for (const auto& f : frames) out.push_back(f.level_index);
  return out;
}

struct Emitted {
  SimTime t;
  PiFrame frame;
};

// Runs one driver over the horizon and returns what it emitted.
std::vector<Emitted> drive(const SensorDescriptor& d, const Signal& s, SimTime horizon) {
  Kernel k;
  std::vector<Emitted> out;
  SamplingDriver driver(d, s, horizon, [&](SimTime t, const PiFrame& f) { out.push_back({t, f}); });
  driver.start(k);
  k.run_until(horizon);
  return out;
}

}  // namespace

TEST(Observe, MonotonicThreeQuanta) {
  const auto d = descriptor(1, 0.1, 0.0, TrackingMode::kMonotonic);
  SensorState st = SensorState::activate(d);
  const auto frames = observe(st, d, SimTime{1}, 0.35);
  EXPECT_EQ(levels(frames), (std::vector<std::int32_t>{1, 2, 3}));
  for (const auto& f : frames) EXPECT_EQ(f.msg_type, MsgType::kEvent);
  EXPECT_EQ(st.seq_no, 3u);
}

TEST(Observe, AtReferenceEmitsNothing) {
  for (TrackingMode mode : {TrackingMode::kMonotonic, TrackingMode::kBidirectional}) {
    const auto d = descriptor(1, 0.5, 20.0, mode);
    SensorState st = SensorState::activate(d);
    EXPECT_TRUE(observe(st, d, SimTime{0}, 20.0).empty());
    EXPECT_TRUE(observe(st, d, SimTime{1}, 20.49).empty());
  }
}

TEST(Observe, BidirectionalUpThenDown) {
  const auto d = descriptor(1, 0.5, 20.0, TrackingMode::kBidirectional);
  SensorState st = SensorState::activate(d);
  EXPECT_EQ(levels(observe(st, d, SimTime{1}, 21.3)), (std::vector<std::int32_t>{1, 2}));
  EXPECT_EQ(d.reference(st.ref_level_index), 21.0);
  EXPECT_EQ(levels(observe(st, d, SimTime{2}, 20.4)), (std::vector<std::int32_t>{1}));
  EXPECT_EQ(d.reference(st.ref_level_index), 20.5);
  EXPECT_EQ(st.seq_no, 3u);
}

TEST(Observe, MonotonicRejectsDecrease) {
  const auto d = descriptor(1, 0.1, 0.0, TrackingMode::kMonotonic);
  SensorState st = SensorState::activate(d);
  observe(st, d, SimTime{1}, 0.5);
  EXPECT_THROW(observe(st, d, SimTime{2}, 0.49), MonotonicityViolated);
}

TEST(Observe, InvalidDescriptorRejected) {
  EXPECT_THROW(validate(descriptor(1, 0.0, 0.0, TrackingMode::kMonotonic)), InvalidDescriptor);
  EXPECT_THROW(validate(descriptor(1, 1.0, 0.0, TrackingMode::kMonotonic, SimTime::zero())), InvalidDescriptor);
  EXPECT_NO_THROW(validate(descriptor(1, 1.0, 0.0, TrackingMode::kMonotonic)));
}

TEST(Heartbeat, DueAtInterval) {
  const auto d = descriptor(4, 1.0, 0.0, TrackingMode::kBidirectional);
  SensorState st = SensorState::activate(d);
  EXPECT_FALSE(heartbeat(st, d, SimTime::hours(5) + SimTime::minutes(59)).has_value());
  const auto f = heartbeat(st, d, SimTime::hours(6));
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->msg_type, MsgType::kStatus);
  EXPECT_EQ(f->seq_no, 1u);
  EXPECT_EQ(f->level_index, 0);
  EXPECT_EQ(st.next_status_at, SimTime::hours(12));
}

TEST(Heartbeat, CarriesCurrentLevel) {
  const auto d = descriptor(4, 1.0, 0.0, TrackingMode::kBidirectional);
  SensorState st = SensorState::activate(d);
  observe(st, d, SimTime{5}, -2.5);
  const auto f = heartbeat(st, d, SimTime::hours(6));
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->level_index, -2);
  EXPECT_EQ(f->seq_no, 3u);
}

TEST(SamplingDriver, IdleDayGivesFourStatusFrames) {
  const SimTime day = SimTime::hours(24);
  const auto out = drive(descriptor(1, 0.1, 0.0, TrackingMode::kMonotonic), Signal::cumulative({}, day), day);
  ASSERT_EQ(out.size(), 4u);
  for (std::size_t i = 0; i < out.size(); ++i) {
    EXPECT_EQ(out[i].frame.msg_type, MsgType::kStatus);
    EXPECT_EQ(out[i].t, SimTime::hours(6) * (i + 1));
  }
}

TEST(SamplingDriver, ObservesAtHalfHourMarks) {
  const SimTime horizon = SimTime::hours(3);
  const auto out = drive(descriptor(1, 0.5, 0.0, TrackingMode::kMonotonic, SimTime::hours(24)),
                         Signal::cumulative(StepLoadSpec{1.0, {}}, horizon), horizon);
  ASSERT_EQ(out.size(), 6u);
  for (std::size_t i = 0; i < out.size(); ++i) {
    EXPECT_EQ(out[i].t, SimTime::minutes(30) * (i + 1));
    EXPECT_EQ(out[i].frame.level_index, static_cast<std::int32_t>(i + 1));
  }
}

TEST(SamplingDriver, SimultaneousCrossingsLowerIdFirst) {
  const SimTime horizon = SimTime::hours(2);
  const Signal s = Signal::cumulative(StepLoadSpec{1.0, {}}, horizon);
  Kernel k;
  std::vector<std::uint32_t> order;
  auto record = [&](SimTime, const PiFrame& f) { order.push_back(f.sensor_id); };
  SamplingDriver high(descriptor(9, 0.5, 0.0, TrackingMode::kMonotonic, SimTime::hours(24)), s, horizon, record);
  SamplingDriver low(descriptor(3, 0.5, 0.0, TrackingMode::kMonotonic, SimTime::hours(24)), s, horizon, record);
  high.start(k);
  low.start(k);
  k.run_until(horizon);
  EXPECT_EQ(order, (std::vector<std::uint32_t>{3, 9, 3, 9, 3, 9, 3, 9}));
}

TEST(SamplingDriver, ObservationPrecedesHeartbeatAtSameInstant) {
  const SimTime horizon = SimTime::hours(1);
  const auto out = drive(descriptor(1, 0.5, 0.0, TrackingMode::kMonotonic, SimTime::minutes(30)),
                         Signal::cumulative(StepLoadSpec{1.0, {}}, horizon), horizon);
  ASSERT_EQ(out.size(), 4u);
  EXPECT_EQ(out[0].frame.msg_type, MsgType::kEvent);
  EXPECT_EQ(out[1].frame.msg_type, MsgType::kStatus);
  EXPECT_EQ(out[1].frame.level_index, 1);
}

// Properties over random cumulative and ambient signals.
class SensorProperties : public ::testing::TestWithParam<int> {};

TEST_P(SensorProperties, ConservationSeqAndEmissionTimes) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()));
  const SimTime horizon = SimTime::hours(6 + rng() % 19);
  std::uniform_real_distribution<double> u(0.0, 1.0);

  StepLoadSpec load{u(rng), {}};
  for (int i = 0; i < 4; ++i) {
    const SimTime a{rng() % horizon.millis()};
    load.intervals.push_back(LoadInterval{a, SimTime{a.millis() + 1 + rng() % (horizon.millis() - a.millis())},
                                          3.0 * u(rng)});
  }
  const Signal meter = Signal::cumulative(load, horizon);
  const auto dm = descriptor(1, 0.05 + u(rng), 0.0, TrackingMode::kMonotonic, SimTime::hours(1 + rng() % 8));

  DiurnalSpec amb{.mean = 10.0, .amplitude = 6.0 * u(rng), .phase = SimTime{rng() % 86'400'000},
                  .noise_sigma = 0.4 * u(rng), .noise_step = SimTime::minutes(5 + rng() % 20)};
  const Signal air = Signal::ambient(amb, horizon, rng());
  const auto da = descriptor(2, 0.1 + u(rng), 10.0, TrackingMode::kBidirectional, SimTime::hours(1 + rng() % 8));

  for (const auto& [d, s] : {std::pair{dm, &meter}, std::pair{da, &air}}) {
    const auto out = drive(d, *s, horizon);
    const auto oracle = crossing_times(*s, d.p0, d.dp, horizon, d.mode);

    std::vector<Crossing> events;
    std::int32_t level = 0;
    std::uint64_t status = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
      ASSERT_EQ(out[i].frame.seq_no, i + 1) << "seq_no must count every frame";
      if (out[i].frame.msg_type == MsgType::kEvent) {
        const int dir = out[i].frame.level_index - level;
        ASSERT_TRUE(dir == 1 || dir == -1);
        events.push_back({out[i].t, dir});
        level = out[i].frame.level_index;
      } else {
        ASSERT_EQ(out[i].frame.level_index, level);
        ++status;
      }
    }
    EXPECT_EQ(events, oracle);
    EXPECT_EQ(status, horizon.millis() / d.status_interval.millis());

    const double truth = s->value_at(horizon);
    if (d.mode == TrackingMode::kMonotonic) {
      EXPECT_LE(level * d.dp, truth);
      EXPECT_LT(truth, (level + 1) * d.dp);
    } else {
      EXPECT_LT(std::abs(truth - d.reference(level)), d.dp);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(RandomSignals, SensorProperties, ::testing::Range(1, 31));

TEST(SamplingDriver, ConstantSignalIsSilentOverAnyHorizon) {
  for (std::uint64_t h : {1, 5, 24, 72}) {
    const SimTime horizon = SimTime::hours(h);
    const Signal flat = Signal::ambient(DiurnalSpec{.mean = -3.0}, horizon, h);
    for (const auto& e : drive(descriptor(1, 0.2, -3.0, TrackingMode::kBidirectional), flat, horizon)) {
      EXPECT_EQ(e.frame.msg_type, MsgType::kStatus);
    }
  }
}
