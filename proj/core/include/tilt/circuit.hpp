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

#include <cstdint>
#include <string>
#include <vector>

namespace tilt {

/// Index of a logical qubit, in [0, n) for an n-qubit circuit.
using QubitId = std::int32_t;

enum class GateKind { SingleQubit, TwoQubit, Swap };

/// One gate application. Two-qubit gates (including explicit swap gates in
/// the input program) act on two distinct qubits; single-qubit gates carry
/// q1 == -1. Gate ids are unique and reflect program order.
struct Gate {
  int id = 0;
  GateKind kind = GateKind::SingleQubit;
  std::string name;
  QubitId q0 = 0;
  QubitId q1 = -1;
  std::vector<double> params;

  [[nodiscard]] bool is_two_qubit() const {
    return kind != GateKind::SingleQubit;
  }
  [[nodiscard]] int num_operands() const { return is_two_qubit() ? 2 : 1; }
  [[nodiscard]] bool touches(QubitId q) const {
    return q0 == q || (is_two_qubit() && q1 == q);
  }
};

struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;
  std::string name;

  /// Number of two-qubit gates (explicit swap gates count, single-qubit
  /// gates never do).
  [[nodiscard]] int two_qubit_gate_count() const;

  /// Throws std::invalid_argument if any structural invariant is broken:
  /// operand out of range, duplicate operands on a two-qubit gate, or gate
  /// ids that are not 0..gates-1 in order.
  void validate() const;
};

[[nodiscard]] bool same_structure(const Gate& a, const Gate& b);

/// Structural equality ignoring the circuit name.
[[nodiscard]] bool same_structure(const Circuit& a, const Circuit& b);

}  // namespace tilt
