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

#include <random>
#include <string>
#include <vector>

#include "tilt/circuit.hpp"

namespace tilt::testing {

/// Random circuit with the given number of two-qubit gates plus a sprinkle
/// of single-qubit gates. Deterministic per seed.
inline Circuit random_circuit(int n_qubits, int two_qubit_gates,
                              unsigned seed, double single_ratio = 0.25) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, n_qubits - 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Circuit c;
  c.n_qubits = n_qubits;
  c.name = "random-" + std::to_string(seed);
  int id = 0;
  for (int i = 0; i < two_qubit_gates; ++i) {
    if (coin(rng) < single_ratio) {
      Gate s;
      s.id = id++;
      s.kind = GateKind::SingleQubit;
      s.name = "h";
      s.q0 = pick(rng);
      c.gates.push_back(s);
    }
    int a = pick(rng);
    int b = pick(rng);
    while (b == a) {
      b = pick(rng);
    }
    Gate g;
    g.id = id++;
    g.kind = GateKind::TwoQubit;
    g.name = "cx";
    g.q0 = a;
    g.q1 = b;
    c.gates.push_back(g);
  }
  c.validate();
  return c;
}

/// Two-qubit-only circuit from a pair list, for hand-written cases.
inline Circuit pairs_circuit(int n_qubits,
                             const std::vector<std::pair<int, int>>& pairs) {
  Circuit c;
  c.n_qubits = n_qubits;
  c.name = "pairs";
  for (const auto& [a, b] : pairs) {
    Gate g;
    g.id = static_cast<int>(c.gates.size());
    g.kind = GateKind::TwoQubit;
    g.name = "cx";
    g.q0 = a;
    g.q1 = b;
    c.gates.push_back(g);
  }
  c.validate();
  return c;
}

}  // namespace tilt::testing
