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

#include "tilt/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace tilt {

int Circuit::two_qubit_gate_count() const {
  return static_cast<int>(std::count_if(
      gates.begin(), gates.end(),
      [](const Gate& g) { return g.is_two_qubit(); }));
}

void Circuit::validate() const {
  if (n_qubits < 0) {
    throw std::invalid_argument("circuit has negative qubit count");
  }
  int expected_id = 0;
  for (const Gate& g : gates) {
    if (g.id != expected_id++) {
      throw std::invalid_argument("gate ids must be 0..N-1 in program order");
    }
    if (g.q0 < 0 || g.q0 >= n_qubits) {
      throw std::invalid_argument("gate operand out of range");
    }
    if (g.is_two_qubit()) {
      if (g.q1 < 0 || g.q1 >= n_qubits) {
        throw std::invalid_argument("gate operand out of range");
      }
      if (g.q0 == g.q1) {
        throw std::invalid_argument(
            "two-qubit gate requires two distinct operands");
      }
    } else if (g.q1 != -1) {
      throw std::invalid_argument("single-qubit gate carries a second operand");
    }
  }
}

bool same_structure(const Gate& a, const Gate& b) {
  return a.id == b.id && a.kind == b.kind && a.name == b.name &&
         a.q0 == b.q0 && a.q1 == b.q1 && a.params == b.params;
}

bool same_structure(const Circuit& a, const Circuit& b) {
  if (a.n_qubits != b.n_qubits || a.gates.size() != b.gates.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.gates.size(); ++i) {
    if (!same_structure(a.gates[i], b.gates[i])) {
      return false;
    }
  }
  return true;
}

}  // namespace tilt
