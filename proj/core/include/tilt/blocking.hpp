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
#include <vector>

#include "tilt/circuit.hpp"

namespace tilt {

/// A dependency-closed run of gates touching at most Z distinct qubits.
/// Gate ids are stored in a dependency-consistent execution order; qubits is
/// the sorted union of the gates' operands.
struct Block {
  int id = 0;
  std::vector<int> gate_ids;
  std::vector<QubitId> qubits;
};

struct BlockStats {
  std::size_t count = 0;
  double mean_qubits = 0.0;
  double vacancy_rate = 0.0;
};

enum class FrontierStrategy { Fifo };

/// Partitions a circuit into blocks of at most zone_size distinct qubits.
///
/// Frontier gates are consumed FIFO and grouped per qubit; a two-qubit gate
/// whose merged group would exceed zone_size waits. On frontier exhaustion
/// the largest group (ties: smallest minimum qubit index) is emitted, its
/// qubit references cleared, and the waiting list re-enqueued in FIFO order.
/// Residual groups are flushed at the end in qubit-scan order.
///
/// Every gate lands in exactly one block, and concatenating blocks in output
/// order is a dependency-valid gate order. Throws std::invalid_argument for
/// zone_size < 2.
std::vector<Block> tilt_blocking(const Circuit& c, int zone_size,
                                 FrontierStrategy strategy =
                                     FrontierStrategy::Fifo);

/// Aggregate statistics; an empty block list reports zeros.
BlockStats block_stats(const std::vector<Block>& blocks, int zone_size);

}  // namespace tilt
