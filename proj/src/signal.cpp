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

#include "asmi/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "asmi/rng.hpp"

namespace asmi {

namespace {

constexpr double kMillisPerHour = 3'600'000.0;

double hours_between(SimTime a, SimTime b) { return static_cast<double>(b.millis() - a.millis()) / kMillisPerHour; }

}  // namespace

Signal Signal::cumulative(StepLoadSpec spec, SimTime horizon, std::string unit) {
  if (!(spec.base_rate >= 0.0) || !std::isfinite(spec.base_rate)) {
    throw InvalidSignalSpec("base rate must be a finite non-negative number");
  }
  for (const auto& iv : spec.intervals) {
    if (!(iv.start < iv.end)) throw InvalidSignalSpec("load interval must have start < end");
    if (!(iv.rate >= 0.0) || !std::isfinite(iv.rate)) {
      throw InvalidSignalSpec("load interval rate must be a finite non-negative number");
    }
  }
  Signal s;
  s.kind_ = SignalKind::kCumulative;
  s.horizon_ = horizon;
  s.unit_ = std::move(unit);
  s.spec_ = std::move(spec);
  return s;
}

Signal Signal::ambient(DiurnalSpec spec, SimTime horizon, std::uint64_t seed, std::string unit) {
  if (!(spec.amplitude >= 0.0) || !std::isfinite(spec.amplitude)) {
    throw InvalidSignalSpec("amplitude must be a finite non-negative number");
  }
  if (!std::isfinite(spec.mean)) throw InvalidSignalSpec("mean must be finite");
  if (spec.period == SimTime::zero()) throw InvalidSignalSpec("period must be positive");
  if (!(spec.noise_sigma >= 0.0) || !std::isfinite(spec.noise_sigma)) {
    throw InvalidSignalSpec("noise_sigma must be a finite non-negative number");
  }
  if (spec.noise_sigma > 0.0 && spec.noise_step == SimTime::zero()) {
    throw InvalidSignalSpec("noise_step must be positive when noise_sigma > 0");
  }

  Signal s;
  s.kind_ = SignalKind::kAmbient;
  s.horizon_ = horizon;
  s.unit_ = std::move(unit);
  s.seed_ = seed;
  if (spec.noise_sigma > 0.0) {
    const std::uint64_t steps = horizon.millis() / spec.noise_step.millis();
    RandomStream rng(stream_seed(seed, "signal-noise", 0));
    s.noise_walk_.reserve(steps + 1);
    double level = 0.0;
    s.noise_walk_.push_back(level);
    for (std::uint64_t i = 0; i < steps; ++i) {
      level += spec.noise_sigma * standard_normal(rng);
      s.noise_walk_.push_back(level);
    }
  }
  s.spec_ = std::move(spec);
  return s;
}

double Signal::value_at(SimTime t) const {
  if (t > horizon_) {
    throw OutOfHorizon("signal evaluated at " + std::to_string(t.millis()) + " ms beyond horizon " +
                       std::to_string(horizon_.millis()) + " ms");
  }
  return kind_ == SignalKind::kCumulative ? cumulative_at(t) : ambient_at(t);
}

double Signal::cumulative_at(SimTime t) const {
  const auto& spec = std::get<StepLoadSpec>(spec_);
  double total = spec.base_rate * hours_between(SimTime::zero(), t);
  for (const auto& iv : spec.intervals) {
    if (t <= iv.start) continue;
    const SimTime stop = std::min(t, iv.end);
    total += iv.rate * hours_between(iv.start, stop);
  }
  return total;
}

double Signal::ambient_at(SimTime t) const {
  const auto& spec = std::get<DiurnalSpec>(spec_);
  const auto period = static_cast<std::int64_t>(spec.period.millis());
  const std::int64_t shifted = static_cast<std::int64_t>(t.millis()) - static_cast<std::int64_t>(spec.phase.millis());
  // Reduce to one period in integer arithmetic so sin() sees an exact
  // fraction of the cycle (quarter periods land on +-1 and 0 exactly).
  const std::int64_t within = ((shifted % period) + period) % period;
  const double fraction = static_cast<double>(within) / static_cast<double>(period);
  double value = spec.mean + spec.amplitude * std::sin(2.0 * std::numbers::pi * fraction);
  if (!noise_walk_.empty()) {
    value += noise_walk_[t.millis() / spec.noise_step.millis()];
  }
  return value;
}

std::vector<SimTime> Signal::monotone_breakpoints() const {
  std::vector<SimTime> points{SimTime::zero()};
  if (kind_ == SignalKind::kAmbient) {
    const auto& spec = std::get<DiurnalSpec>(spec_);
    if (!noise_walk_.empty()) {
      for (SimTime tick = spec.noise_step; tick <= horizon_; tick += spec.noise_step) points.push_back(tick);
    }
    if (spec.amplitude > 0.0) {
      // Extrema sit at phase + period/4 + j*period/2; work in quarter
      // milliseconds so both neighbours of a fractional extremum are kept.
      const auto period = static_cast<std::int64_t>(spec.period.millis());
      const std::int64_t first_q = 4 * static_cast<std::int64_t>(spec.phase.millis()) + period;
      const std::int64_t step_q = 2 * period;
      const std::int64_t limit_q = 4 * static_cast<std::int64_t>(horizon_.millis());
      std::int64_t j = -(first_q / step_q) - 1;
      for (std::int64_t q = first_q + j * step_q; q <= limit_q; q += step_q) {
        if (q < 0) continue;
        const std::int64_t lo = q / 4;
        const std::int64_t hi = (q + 3) / 4;
        if (lo > 0) points.emplace_back(static_cast<std::uint64_t>(lo));
        if (hi != lo && hi <= static_cast<std::int64_t>(horizon_.millis())) {
          points.emplace_back(static_cast<std::uint64_t>(hi));
        }
      }
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

std::vector<Crossing> crossing_times(const Signal& signal, double p0, double dp, SimTime horizon,
                                     TrackingMode mode) {
  if (!(dp > 0.0) || !std::isfinite(dp)) throw NonPositiveDelta("dP must be a finite positive number");
  if (horizon > signal.horizon()) throw OutOfHorizon("crossing search horizon exceeds signal horizon");

  const bool bidirectional = mode == TrackingMode::kBidirectional;
  std::int64_t level = 0;
  std::vector<Crossing> out;

  auto fires = [&](SimTime t) {
    const double p = signal.value_at(t);
    return above_next_level(p, p0, dp, level) || (bidirectional && below_previous_level(p, p0, dp, level));
  };
  auto settle = [&](SimTime t) {
    const double p = signal.value_at(t);
    while (above_next_level(p, p0, dp, level)) {
      ++level;
      out.push_back({t, +1});
    }
    if (!bidirectional) return;
    while (below_previous_level(p, p0, dp, level)) {
      --level;
      out.push_back({t, -1});
    }
  };

  const std::vector<SimTime> breaks = signal.monotone_breakpoints();
  for (std::size_t i = 0; i < breaks.size() && breaks[i] <= horizon; ++i) {
    const SimTime piece_end =
        (i + 1 < breaks.size() && breaks[i + 1] <= horizon) ? breaks[i + 1] - SimTime{1} : horizon;
    SimTime cur = breaks[i];
    settle(cur);
    // Within a monotone piece the settled state can only be left in one
    // direction, so "fires" is false up to the next crossing and true after.
    while (cur < piece_end && fires(piece_end)) {
      std::uint64_t lo = cur.millis();
      std::uint64_t hi = piece_end.millis();
      while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (fires(SimTime{mid})) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      cur = SimTime{hi};
      settle(cur);
    }
  }
  return out;
}

}  // namespace asmi
