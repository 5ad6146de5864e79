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

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "asmi/sim_time.hpp"

namespace asmi {

/// Actor classes in tie-break rank order. Events at equal time fire
/// class by class in this order.
enum class ActorClass : std::uint8_t {
  kSignal = 0,
  kSensor = 1,
  kRadio = 2,
  kRouter = 3,
  kCenter = 4,
};

struct PriorityKey {
  ActorClass actor_class = ActorClass::kSignal;
  std::uint64_t actor_id = 0;
  std::uint64_t sequence = 0;

  auto operator<=>(const PriorityKey&) const = default;
};

struct ActorRef {
  ActorClass actor_class;
  std::uint64_t actor_id;
};

class SchedulingInPast : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

using EventHandle = std::uint64_t;

struct FiredEvent {
  SimTime fire_at;
  PriorityKey key;

  bool operator==(const FiredEvent&) const = default;
};

/// Single-threaded discrete-event scheduler.
///
/// Events are totally ordered by (fire_at, priority key, insertion order).
/// Insertion order only matters when a caller reuses a full priority key,
/// and even then it is a deterministic function of the call sequence.
class Kernel {
public:
  using Action = std::function<void()>;

  Kernel() = default;
  Kernel(const Kernel&) = delete;
  Kernel& operator=(const Kernel&) = delete;

  EventHandle schedule(SimTime fire_at, PriorityKey key, Action action);

  /// Schedules with the next per-actor sequence number filled in.
  EventHandle schedule(SimTime fire_at, ActorRef actor, Action action);

  /// Fires every event with fire_at <= t_end, including ones scheduled while
  /// running, then advances now() to t_end. A t_end earlier than now() fires
  /// nothing and leaves the clock where it is.
  std::uint64_t run_until(SimTime t_end);

  SimTime now() const { return now_; }
  std::size_t pending() const { return queue_.size(); }
  std::uint64_t fired_total() const { return fired_total_; }

  void enable_trace(bool on) { trace_enabled_ = on; }
  const std::vector<FiredEvent>& trace() const { return trace_; }

private:
  struct Entry {
    SimTime fire_at;
    PriorityKey key;
    std::uint64_t insertion;
    Action action;
  };
  struct Later {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.fire_at != b.fire_at) return a.fire_at > b.fire_at;
      if (a.key != b.key) return a.key > b.key;
      return a.insertion > b.insertion;
    }
  };

  std::priority_queue<Entry, std::vector<Entry>, Later> queue_;
  std::map<std::pair<ActorClass, std::uint64_t>, std::uint64_t> actor_sequence_;
  SimTime now_{};
  std::uint64_t next_insertion_ = 0;
  std::uint64_t fired_total_ = 0;
  bool trace_enabled_ = false;
  std::vector<FiredEvent> trace_;
};

}  // namespace asmi
