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

#include "tilt/circuit.hpp"

namespace tilt {

/// Generator families:
///   qft          controlled-phase ladder, n(n-1)/2 two-qubit gates
///   bv           Bernstein-Vazirani with the shared target on qubit 0,
///                n-1 two-qubit gates, all long-distance
///   qaoa-ring    one ZZ layer over a ring of n qubits (n gates); a nonzero
///                seed relabels the ring vertices
///   alt          20 rounds of alternating nearest-neighbor layers
///   rcs-like     18 seeded layers of random nearest-neighbor two-qubit
///                gates with interleaved single-qubit rotations
///   adder-ripple ripple-carry adder ladder (Toffolis expanded to CX),
///                short-distance gates
///
/// Deterministic for a fixed (name, n_qubits, seed); seed only affects
/// rcs-like and qaoa-ring. Throws std::invalid_argument for unknown names or
/// n_qubits < 2.
Circuit generate_benchmark(const std::string& name, int n_qubits,
                           unsigned seed = 0);

[[nodiscard]] const std::vector<std::string>& benchmark_names();

/// Replaces every controlled-phase gate with a CX / RZ / CX sandwich,
/// doubling the two-qubit gate count while leaving qubit pairs unchanged.
Circuit decompose_cp_to_cx(const Circuit& c);

}  // namespace tilt
