// Copyright 2026 The tiltc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

namespace tilt {

enum class EventKind { ApplyGate, ApplySwap, Shuttle, Cool };

/// One primitive step of a compiled program. ApplyGate carries the circuit
/// gate id and the tape positions of its operands at execution time (pos1 is
/// -1 for single-qubit gates). ApplySwap is a compiler-inserted swap gate on
/// two in-zone positions. Shuttle moves the head by a nonzero delta;
/// moved_ions records how many selected ions the move was carrying.
struct ScheduleEvent {
  EventKind kind = EventKind::Cool;
  int gate_id = -1;
  int pos0 = -1;
  int pos1 = -1;
  int delta = 0;
  int moved_ions = 0;

  static ScheduleEvent gate(int id, int p0, int p1 = -1) {
    ScheduleEvent e;
    e.kind = EventKind::ApplyGate;
    e.gate_id = id;
    e.pos0 = p0;
    e.pos1 = p1;
    return e;
  }
  static ScheduleEvent swap(int p0, int p1) {
    ScheduleEvent e;
    e.kind = EventKind::ApplySwap;
    e.pos0 = p0;
    e.pos1 = p1;
    return e;
  }
  static ScheduleEvent shuttle(int delta, int moved_ions = 0) {
    ScheduleEvent e;
    e.kind = EventKind::Shuttle;
    e.delta = delta;
    e.moved_ions = moved_ions;
    return e;
  }
  static ScheduleEvent cool() { return ScheduleEvent{}; }
};

struct ScheduleMetrics {
  long shuttles = 0;
  long swaps = 0;
  long shuttle_distance = 0;
  long two_qubit_gates = 0;
  long blocks = 0;

  bool operator==(const ScheduleMetrics&) const = default;
};

/// A compiled program: the event stream plus the final qubit->position map
/// and the metrics accumulated while emitting. Replaying the events from the
/// identity tape reproduces both.
struct Schedule {
  int n = 0;
  int zone = 0;
  std::string algorithm;
  std::string circuit_name;
  std::vector<ScheduleEvent> events;
  std::vector<int> final_positions;
  ScheduleMetrics metrics;
};

}  // namespace tilt
