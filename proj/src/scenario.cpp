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

#include "asmi/scenario.hpp"

#include <cmath>
#include <limits>
#include <set>

#include "asmi/rng.hpp"

namespace asmi {

using nlohmann::json;

namespace {

std::string join(const std::string& base, const std::string& key) { return base.empty() ? key : base + "." + key; }

std::string index(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

// Collects every problem instead of stopping at the first one.
class Reader {
public:
  std::vector<ValidationError> errors;

  void fail(std::string path, std::string message) { errors.push_back({std::move(path), std::move(message)}); }

  const json* field(const json& obj, const std::string& base, const std::string& key, bool required) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) {
      if (required) fail(join(base, key), "is required");
      return nullptr;
    }
    return &*it;
  }

  const json* object(const json& obj, const std::string& base, const std::string& key, bool required) {
    const json* v = field(obj, base, key, required);
    if (v && !v->is_object()) {
      fail(join(base, key), "must be an object");
      return nullptr;
    }
    return v;
  }

  const json* array(const json& obj, const std::string& base, const std::string& key, bool required) {
    const json* v = field(obj, base, key, required);
    if (v && !v->is_array()) {
      fail(join(base, key), "must be an array");
      return nullptr;
    }
    return v;
  }

  std::optional<std::uint64_t> u64(const json& obj, const std::string& base, const std::string& key,
                                   bool required, std::optional<std::uint64_t> fallback = std::nullopt) {
    const json* v = field(obj, base, key, required);
    if (!v) return fallback;
    if (!v->is_number_unsigned() && !(v->is_number_integer() && v->get<std::int64_t>() >= 0)) {
      fail(join(base, key), "must be a non-negative integer");
      return std::nullopt;
    }
    return v->get<std::uint64_t>();
  }

  std::optional<std::uint32_t> u32(const json& obj, const std::string& base, const std::string& key,
                                   bool required) {
    auto v = u64(obj, base, key, required);
    if (v && *v > std::numeric_limits<std::uint32_t>::max()) {
      fail(join(base, key), "must fit in 32 bits");
      return std::nullopt;
    }
    return v ? std::optional<std::uint32_t>(static_cast<std::uint32_t>(*v)) : std::nullopt;
  }

  std::optional<std::int64_t> i64(const json& obj, const std::string& base, const std::string& key,
                                  bool required, std::optional<std::int64_t> fallback = std::nullopt) {
    const json* v = field(obj, base, key, required);
    if (!v) return fallback;
    if (!v->is_number_integer()) {
      fail(join(base, key), "must be an integer");
      return std::nullopt;
    }
    return v->get<std::int64_t>();
  }

  std::optional<SimTime> time(const json& obj, const std::string& base, const std::string& key, bool required,
                              std::optional<SimTime> fallback = std::nullopt) {
    auto v = u64(obj, base, key, required);
    if (v) return SimTime{*v};
    return obj.contains(key) && !obj.at(key).is_null() ? std::nullopt : fallback;
  }

  std::optional<SimTime> positive_time(const json& obj, const std::string& base, const std::string& key,
                                       bool required, std::optional<SimTime> fallback = std::nullopt) {
    auto v = time(obj, base, key, required, fallback);
    if (v && *v == SimTime::zero()) {
      fail(join(base, key), "must be positive");
      return std::nullopt;
    }
    return v;
  }

  std::optional<double> number(const json& obj, const std::string& base, const std::string& key, bool required,
                               std::optional<double> fallback = std::nullopt) {
    const json* v = field(obj, base, key, required);
    if (!v) return fallback;
    if (!v->is_number() || !std::isfinite(v->get<double>())) {
      fail(join(base, key), "must be a finite number");
      return std::nullopt;
    }
    return v->get<double>();
  }

  std::optional<std::string> string(const json& obj, const std::string& base, const std::string& key,
                                    bool required, std::optional<std::string> fallback = std::nullopt) {
    const json* v = field(obj, base, key, required);
    if (!v) return fallback;
    if (!v->is_string()) {
      fail(join(base, key), "must be a string");
      return std::nullopt;
    }
    return v->get<std::string>();
  }

  std::optional<bool> boolean(const json& obj, const std::string& base, const std::string& key, bool required,
                              std::optional<bool> fallback = std::nullopt) {
    const json* v = field(obj, base, key, required);
    if (!v) return fallback;
    if (!v->is_boolean()) {
      fail(join(base, key), "must be true or false");
      return std::nullopt;
    }
    return v->get<bool>();
  }
};

std::optional<Signal> read_signal(Reader& r, const json& s, const std::string& path, SimTime horizon,
                                  std::uint64_t scenario_seed, std::size_t position) {
  auto kind = r.string(s, path, "kind", true);
  auto unit = r.string(s, path, "unit", false, std::string{});
  auto seed = r.u64(s, path, "seed", false, stream_seed(scenario_seed, "signal", position));
  if (!kind) return std::nullopt;

  if (*kind == "CUMULATIVE") {
    const std::string sl_path = join(path, "step_load");
    const json* sl = r.object(s, path, "step_load", false);
    StepLoadSpec spec;
    bool good = true;
    if (sl) {
      auto base = r.number(*sl, sl_path, "base_rate", false, 0.0);
      if (!base) {
        good = false;
      } else if (*base < 0.0) {
        r.fail(join(sl_path, "base_rate"), "must be non-negative");
        good = false;
      } else {
        spec.base_rate = *base;
      }
      if (const json* ivs = r.array(*sl, sl_path, "intervals", false)) {
        for (std::size_t i = 0; i < ivs->size(); ++i) {
          const std::string ip = index(join(sl_path, "intervals"), i);
          const json& iv = (*ivs)[i];
          if (!iv.is_object()) {
            r.fail(ip, "must be an object");
            good = false;
            continue;
          }
          auto start = r.time(iv, ip, "start", true);
          auto end = r.time(iv, ip, "end", true);
          auto rate = r.number(iv, ip, "rate", true);
          if (!start || !end || !rate) {
            good = false;
            continue;
          }
          if (!(*start < *end)) {
            r.fail(ip, "start must be before end");
            good = false;
          }
          if (*rate < 0.0) {
            r.fail(join(ip, "rate"), "must be non-negative");
            good = false;
          }
          spec.intervals.push_back(LoadInterval{*start, *end, *rate});
        }
      }
    }
    if (!good || !unit) return std::nullopt;
    return Signal::cumulative(std::move(spec), horizon, *unit);
  }

  if (*kind == "AMBIENT") {
    const std::string dp = join(path, "diurnal");
    const json* d = r.object(s, path, "diurnal", true);
    if (!d) return std::nullopt;
    DiurnalSpec spec;
    auto mean = r.number(*d, dp, "mean", true);
    auto amplitude = r.number(*d, dp, "amplitude", false, 0.0);
    auto period = r.positive_time(*d, dp, "period", false, SimTime::hours(24));
    auto phase = r.time(*d, dp, "phase", false, SimTime::zero());
    auto sigma = r.number(*d, dp, "noise_sigma", false, 0.0);
    auto step = r.positive_time(*d, dp, "noise_step", false, SimTime::minutes(10));
    bool good = mean && amplitude && period && phase && sigma && step && unit && seed;
    if (amplitude && *amplitude < 0.0) {
      r.fail(join(dp, "amplitude"), "must be non-negative");
      good = false;
    }
    if (sigma && *sigma < 0.0) {
      r.fail(join(dp, "noise_sigma"), "must be non-negative");
      good = false;
    }
    if (!good) return std::nullopt;
    spec.mean = *mean;
    spec.amplitude = *amplitude;
    spec.period = *period;
    spec.phase = *phase;
    spec.noise_sigma = *sigma;
    spec.noise_step = *step;
    return Signal::ambient(spec, horizon, *seed, *unit);
  }

  r.fail(join(path, "kind"), "must be CUMULATIVE or AMBIENT");
  return std::nullopt;
}

}  // namespace

ValidationResult validate(const json& doc) {
  Reader r;
  ValidationResult result;
  if (!doc.is_object()) {
    r.fail("", "config document must be an object");
    result.errors = std::move(r.errors);
    return result;
  }

  Scenario sc;
  auto scenario_id = r.string(doc, "", "scenario_id", false, std::string("scenario"));
  auto seed = r.u64(doc, "", "seed", true);
  auto horizon = r.positive_time(doc, "", "horizon", true);
  auto sync_interval = r.positive_time(doc, "", "sync_interval", false, SimTime::hours(1));
  auto backhaul = r.time(doc, "", "backhaul_delay", false, SimTime{500});
  auto grid = r.positive_time(doc, "", "error_grid_step", false, SimTime::seconds(60));
  auto outputs = r.string(doc, "", "outputs", false, std::string{});
  if (scenario_id) sc.scenario_id = *scenario_id;
  if (seed) sc.seed = *seed;
  if (horizon) sc.horizon = *horizon;
  if (sync_interval) sc.sync_interval = *sync_interval;
  if (backhaul) sc.backhaul_delay = *backhaul;
  if (grid) sc.error_grid_step = *grid;
  if (outputs) sc.outputs = *outputs;

  // Signals.
  if (const json* signals = r.array(doc, "", "signals", true)) {
    if (signals->empty()) r.fail("signals", "must list at least one signal");
    for (std::size_t i = 0; i < signals->size(); ++i) {
      const std::string path = index("signals", i);
      const json& s = (*signals)[i];
      if (!s.is_object()) {
        r.fail(path, "must be an object");
        continue;
      }
      auto id = r.string(s, path, "id", true);
      if (id && sc.signals.contains(*id)) r.fail(join(path, "id"), "duplicate signal id '" + *id + "'");
      if (!horizon) continue;
      auto signal = read_signal(r, s, path, *horizon, seed.value_or(0), i);
      if (id && signal && !sc.signals.contains(*id)) sc.signals.emplace(*id, std::move(*signal));
    }
  }

  // Routers.
  std::set<std::uint32_t> router_ids;
  if (const json* routers = r.array(doc, "", "routers", true)) {
    if (routers->empty()) r.fail("routers", "must list at least one router");
    for (std::size_t i = 0; i < routers->size(); ++i) {
      const std::string path = index("routers", i);
      const json& j = (*routers)[i];
      if (!j.is_object()) {
        r.fail(path, "must be an object");
        continue;
      }
      RouterConfig rc;
      auto id = r.u32(j, path, "router_id", true);
      auto location = r.string(j, path, "location", false, std::string{});
      auto flush = r.positive_time(j, path, "flush_interval", false, SimTime::seconds(60));
      auto drift = r.number(j, path, "drift_ppm", false, 0.0);
      auto residual = r.i64(j, path, "sync_residual", false, 0);
      bool good = id && location && flush && drift && residual;
      if (id && !router_ids.insert(*id).second) {
        r.fail(join(path, "router_id"), "duplicate router id");
        good = false;
      }
      if (drift && std::abs(*drift) >= 1e5) {
        r.fail(join(path, "drift_ppm"), "must lie within (-100000, 100000)");
        good = false;
      }
      if (residual && *residual < 0) {
        r.fail(join(path, "sync_residual"), "must be non-negative");
        good = false;
      }
      if (!good) continue;
      rc.router_id = *id;
      rc.location = *location;
      rc.flush_interval = *flush;
      rc.drift_ppm = *drift;
      rc.sync_residual_ms = *residual;
      sc.routers.push_back(rc);
    }
  }

  // Sensors.
  std::set<std::uint32_t> sensor_ids;
  if (const json* sensors = r.array(doc, "", "sensors", true)) {
    if (sensors->empty()) r.fail("sensors", "must list at least one sensor");
    for (std::size_t i = 0; i < sensors->size(); ++i) {
      const std::string path = index("sensors", i);
      const json& j = (*sensors)[i];
      if (!j.is_object()) {
        r.fail(path, "must be an object");
        continue;
      }
      SensorPlacement sp;
      auto id = r.u32(j, path, "sensor_id", true);
      auto parameter = r.string(j, path, "parameter", false, std::string{});
      auto unit = r.string(j, path, "unit", false, std::string{});
      auto dp = r.number(j, path, "dP", true);
      auto p0 = r.number(j, path, "P0", false, 0.0);
      auto mode = r.string(j, path, "mode", false, std::string("BIDIRECTIONAL"));
      auto status = r.positive_time(j, path, "status_interval", false, SimTime::hours(6));
      auto signal_id = r.string(j, path, "signal", true);
      auto location = r.string(j, path, "location", false, std::string{});
      auto register_at = r.time(j, path, "register_at", false);

      bool good = id && parameter && unit && dp && p0 && mode && status && signal_id && location;
      if (id && !sensor_ids.insert(*id).second) {
        r.fail(join(path, "sensor_id"), "duplicate sensor id");
        good = false;
      }
      if (dp && !(*dp > 0.0)) {
        r.fail(join(path, "dP"), "dP must be positive");
        good = false;
      }
      TrackingMode tracking = TrackingMode::kBidirectional;
      if (mode) {
        if (*mode == "MONOTONIC") {
          tracking = TrackingMode::kMonotonic;
        } else if (*mode != "BIDIRECTIONAL") {
          r.fail(join(path, "mode"), "must be MONOTONIC or BIDIRECTIONAL");
          good = false;
        }
      }
      if (signal_id) {
        auto sig = sc.signals.find(*signal_id);
        if (sig == sc.signals.end()) {
          r.fail(join(path, "signal"), "unknown signal '" + *signal_id + "'");
          good = false;
        } else if (tracking == TrackingMode::kMonotonic && sig->second.kind() != SignalKind::kCumulative) {
          r.fail(join(path, "mode"), "MONOTONIC requires a CUMULATIVE signal");
          good = false;
        }
      }
      if (!good) continue;
      sp.descriptor.sensor_id = *id;
      sp.descriptor.parameter = *parameter;
      sp.descriptor.unit = *unit;
      sp.descriptor.dp = *dp;
      sp.descriptor.p0 = *p0;
      sp.descriptor.mode = tracking;
      sp.descriptor.status_interval = *status;
      sp.descriptor.signal_id = *signal_id;
      sp.location = *location;
      sp.register_at = register_at;
      sc.sensors.push_back(std::move(sp));
    }
  }

  // Coverage.
  if (const json* coverage = r.array(doc, "", "coverage", true)) {
    for (std::size_t i = 0; i < coverage->size(); ++i) {
      const std::string path = index("coverage", i);
      const json& j = (*coverage)[i];
      if (!j.is_object()) {
        r.fail(path, "must be an object");
        continue;
      }
      auto sid = r.u32(j, path, "sensor_id", true);
      if (sid && !sensor_ids.contains(*sid)) r.fail(join(path, "sensor_id"), "unknown sensor " + std::to_string(*sid));
      const json* list = r.array(j, path, "routers", true);
      if (!list) continue;
      for (std::size_t k = 0; k < list->size(); ++k) {
        const std::string rp = index(join(path, "routers"), k);
        const json& v = (*list)[k];
        if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
            v.get<std::uint64_t>() > std::numeric_limits<std::uint32_t>::max()) {
          r.fail(rp, "must be a router id");
          continue;
        }
        const auto rid = v.get<std::uint32_t>();
        if (!router_ids.contains(rid)) {
          r.fail(rp, "unknown router " + std::to_string(rid));
          continue;
        }
        if (sid) sc.coverage.cover(*sid, rid);
      }
    }
  }
  for (std::size_t i = 0; i < sc.sensors.size(); ++i) {
    if (!sc.coverage.covers(sc.sensors[i].descriptor.sensor_id)) {
      r.fail("coverage", "sensor " + std::to_string(sc.sensors[i].descriptor.sensor_id) +
                             " is not within range of any router");
    }
  }

  // Channel.
  if (const json* ch = r.object(doc, "", "channel", false)) {
    auto loss = r.number(*ch, "channel", "loss_prob", false, 0.0);
    auto latency = r.time(*ch, "channel", "latency", false, SimTime{50});
    auto jitter = r.time(*ch, "channel", "jitter", false, SimTime::zero());
    if (loss && !(*loss >= 0.0 && *loss <= 1.0)) r.fail("channel.loss_prob", "must lie in [0, 1]");
    if (loss) sc.channel.loss_prob = *loss;
    if (latency) sc.channel.latency = *latency;
    if (jitter) sc.channel.jitter = *jitter;
  }

  // Baseline.
  if (const json* b = r.object(doc, "", "baseline", false)) {
    auto enabled = r.boolean(*b, "baseline", "enabled", false, true);
    if (enabled) sc.baseline.enabled = *enabled;
    auto it = b->find("dt");
    if (it == b->end() || it->is_null() || (it->is_string() && it->get<std::string>() == "matched")) {
      sc.baseline.dt.reset();
    } else if (it->is_number_integer() && it->get<std::int64_t>() > 0) {
      sc.baseline.dt = SimTime{it->get<std::uint64_t>()};
    } else {
      r.fail("baseline.dt", "must be a positive integer or \"matched\"");
    }
  }

  result.errors = std::move(r.errors);
  if (result.errors.empty()) result.scenario = std::move(sc);
  return result;
}

std::vector<ValidationError> check(const Scenario& sc) {
  std::vector<ValidationError> errors;
  if (sc.horizon == SimTime::zero()) errors.push_back({"horizon", "must be positive"});
  if (sc.sync_interval == SimTime::zero()) errors.push_back({"sync_interval", "must be positive"});
  if (sc.error_grid_step == SimTime::zero()) errors.push_back({"error_grid_step", "must be positive"});
  std::set<std::uint32_t> routers;
  for (std::size_t i = 0; i < sc.routers.size(); ++i) {
    if (!routers.insert(sc.routers[i].router_id).second) {
      errors.push_back({index("routers", i) + ".router_id", "duplicate router id"});
    }
  }
  std::set<std::uint32_t> sensors;
  for (std::size_t i = 0; i < sc.sensors.size(); ++i) {
    const auto& d = sc.sensors[i].descriptor;
    const std::string path = index("sensors", i);
    if (!sensors.insert(d.sensor_id).second) errors.push_back({path + ".sensor_id", "duplicate sensor id"});
    if (!(d.dp > 0.0)) errors.push_back({path + ".dP", "dP must be positive"});
    auto sig = sc.signals.find(d.signal_id);
    if (sig == sc.signals.end()) {
      errors.push_back({path + ".signal", "unknown signal '" + d.signal_id + "'"});
    } else {
      if (sig->second.horizon() < sc.horizon) errors.push_back({path + ".signal", "signal horizon too short"});
      if (d.mode == TrackingMode::kMonotonic && sig->second.kind() != SignalKind::kCumulative) {
        errors.push_back({path + ".mode", "MONOTONIC requires a CUMULATIVE signal"});
      }
    }
    if (!sc.coverage.covers(d.sensor_id)) {
      errors.push_back({"coverage", "sensor " + std::to_string(d.sensor_id) + " is not within range of any router"});
    }
  }
  for (const auto& [sid, list] : sc.coverage.entries()) {
    if (!sensors.contains(sid)) errors.push_back({"coverage", "unknown sensor " + std::to_string(sid)});
    for (auto rid : list) {
      if (!routers.contains(rid)) errors.push_back({"coverage", "unknown router " + std::to_string(rid)});
    }
  }
  return errors;
}

}  // namespace asmi
