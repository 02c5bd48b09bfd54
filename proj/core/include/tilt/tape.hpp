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

#include <vector>

#include "tilt/circuit.hpp"

namespace tilt {

/// Bijection between logical qubits and tape positions, plus the execution
/// zone head. The zone is the half-open window [head, head + zone_size) of
/// tape positions; ions inside it are fully connected. Starts as the
/// identity mapping with the head at 0.
class TapeState {
 public:
  TapeState(int n_ions, int zone_size, int head = 0);

  [[nodiscard]] int n() const { return static_cast<int>(pos_of_.size()); }
  [[nodiscard]] int zone_size() const { return zone_; }
  [[nodiscard]] int head() const { return head_; }
  [[nodiscard]] int max_head() const { return n() - zone_; }

  [[nodiscard]] int position_of(QubitId q) const { return pos_of_[q]; }
  [[nodiscard]] QubitId ion_at(int pos) const { return ion_at_[pos]; }
  [[nodiscard]] bool in_zone(int pos) const {
    return pos >= head_ && pos < head_ + zone_;
  }

  /// Exchanges the logical qubits sitting at two positions. Throws if either
  /// position is outside the zone.
  void swap_positions(int a, int b);

  /// Moves the head by delta. Throws if the head would leave [0, n - Z].
  void move_head(int delta);

  /// Logical qubit -> tape position, a permutation of [0, n).
  [[nodiscard]] const std::vector<int>& positions() const { return pos_of_; }

 private:
  std::vector<int> pos_of_;
  std::vector<QubitId> ion_at_;
  int zone_;
  int head_;
};

}  // namespace tilt
