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

#include "tilt/depgraph.hpp"

namespace tilt {

std::vector<std::pair<int, int>> DependencyGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int g = 0; g < num_gates; ++g) {
    for (int succ : successors[g]) {
      out.emplace_back(g, succ);
    }
  }
  return out;
}

DependencyGraph build_dependency_graph(const Circuit& c) {
  DependencyGraph dg;
  dg.num_gates = static_cast<int>(c.gates.size());
  dg.successors.resize(dg.num_gates);
  dg.pending_pred_count.assign(dg.num_gates, 0);

  std::vector<int> last_on_qubit(c.n_qubits, -1);
  for (const Gate& g : c.gates) {
    int pred0 = last_on_qubit[g.q0];
    int pred1 = g.is_two_qubit() ? last_on_qubit[g.q1] : -1;
    if (pred0 >= 0) {
      dg.successors[pred0].push_back(g.id);
      ++dg.pending_pred_count[g.id];
    }
    if (pred1 >= 0 && pred1 != pred0) {
      dg.successors[pred1].push_back(g.id);
      ++dg.pending_pred_count[g.id];
    }
    last_on_qubit[g.q0] = g.id;
    if (g.is_two_qubit()) {
      last_on_qubit[g.q1] = g.id;
    }
  }
  for (const Gate& g : c.gates) {
    if (dg.pending_pred_count[g.id] == 0) {
      dg.frontier.push_back(g.id);
    }
  }
  return dg;
}

}  // namespace tilt
