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

#include <cstddef>
#include <string>
#include <vector>

#include "tilt/circuit.hpp"
#include "tilt/schedule.hpp"

namespace tilt {

struct Violation {
  std::size_t event_seq = 0;
  std::string rule;
  std::string detail;
};

/// valid iff violations is empty. The recomputed metrics come from the
/// replay and are authoritative for the cost models.
struct VerificationReport {
  bool valid = false;
  std::vector<Violation> violations;
  ScheduleMetrics metrics;
};

/// Replays a schedule against the tape state machine and checks:
///   zone        gate and swap positions lie inside the live zone
///   head-range  the head stays within [0, n - Z]
///   dependency  each applied gate is the next unexecuted gate on every one
///               of its logical qubits, and its recorded positions map back
///               to its operands
///   coverage    every circuit gate executes exactly once
///   cool        a Cool event follows every Shuttle (and nothing else does)
///   final-state the recorded final positions, when present, match the
///               replayed permutation
/// Violations are reported as data; verify itself never throws on a bad
/// schedule.
VerificationReport verify(const Circuit& c, const Schedule& s, int zone_size);

/// Exhaustive 0-1 BFS over (permutation, head, executed-set) states, where
/// in-zone swaps and gate executions are free and every head move costs one
/// shuttle. Returns the minimum shuttle count needed to run the circuit.
/// Only for tiny instances; throws std::invalid_argument when
/// c.n_qubits > 6 or zone_size > 3 or the circuit has more than 16 gates.
int optimal_shuttles_bruteforce(const Circuit& c, int zone_size);

}  // namespace tilt
