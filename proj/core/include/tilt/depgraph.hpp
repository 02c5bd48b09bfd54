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

#include <deque>
#include <utility>
#include <vector>

#include "tilt/circuit.hpp"

namespace tilt {

/// Gate dependency DAG. A gate's direct predecessors are, per operand qubit,
/// the most recent earlier gate on that qubit. The frontier is a FIFO queue
/// of gates whose predecessors have all been completed; it starts with every
/// zero-predecessor gate in program order.
///
/// Consumers pop gates from the frontier and later either complete them
/// (releasing successors) or re-enqueue them. A popped-but-uncompleted gate
/// keeps its successors blocked.
struct DependencyGraph {
  int num_gates = 0;
  std::vector<std::vector<int>> successors;
  std::vector<int> pending_pred_count;
  std::deque<int> frontier;

  [[nodiscard]] bool frontier_empty() const { return frontier.empty(); }

  int pop_frontier() {
    int g = frontier.front();
    frontier.pop_front();
    return g;
  }

  void enqueue(int gate_id) { frontier.push_back(gate_id); }

  /// Marks a gate as done, enqueueing successors that become ready.
  void complete(int gate_id) {
    for (int succ : successors[gate_id]) {
      if (--pending_pred_count[succ] == 0) {
        frontier.push_back(succ);
      }
    }
  }

  /// All directed edges (predecessor, successor), for inspection and tests.
  [[nodiscard]] std::vector<std::pair<int, int>> edges() const;
};

/// Single pass over the gate list; linear in gate count.
DependencyGraph build_dependency_graph(const Circuit& c);

}  // namespace tilt
