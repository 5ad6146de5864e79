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

#include "asmi/kernel.hpp"

#include <string>

namespace asmi {

EventHandle Kernel::schedule(SimTime fire_at, PriorityKey key, Action action) {
  if (fire_at < now_) {
    throw SchedulingInPast("event at " + std::to_string(fire_at.millis()) +
                           " ms scheduled after kernel reached " + std::to_string(now_.millis()) + " ms");
  }
  const EventHandle handle = next_insertion_++;
  queue_.push(Entry{fire_at, key, handle, std::move(action)});
  return handle;
}

EventHandle Kernel::schedule(SimTime fire_at, ActorRef actor, Action action) {
  auto& seq = actor_sequence_[{actor.actor_class, actor.actor_id}];
  const EventHandle handle =
      schedule(fire_at, PriorityKey{actor.actor_class, actor.actor_id, seq}, std::move(action));
  ++seq;
  return handle;
}

std::uint64_t Kernel::run_until(SimTime t_end) {
  if (t_end < now_) return 0;
  std::uint64_t fired = 0;
  while (!queue_.empty() && queue_.top().fire_at <= t_end) {
    // priority_queue::top is const; the entry is popped before the action
    // runs so the action may schedule freely.
    Entry entry = std::move(const_cast<Entry&>(queue_.top()));
    queue_.pop();
    now_ = entry.fire_at;
    if (trace_enabled_) trace_.push_back(FiredEvent{entry.fire_at, entry.key});
    entry.action();
    ++fired;
  }
  now_ = t_end;
  fired_total_ += fired;
  return fired;
}

}  // namespace asmi
