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

#include "tilt/blocking.hpp"
#include "tilt/circuit.hpp"
#include "tilt/schedule.hpp"
#include "tilt/tape.hpp"

namespace tilt {

struct MoveResult {
  std::vector<ScheduleEvent> events;
  TapeState state;
};

/// Displaces a contiguous run of selected ions by `distance` positions
/// relative to the rest of the tape, preserving the internal order of both
/// the selected and the unselected ions.
///
/// The selection must sit at the zone edge trailing the move (left edge for
/// distance > 0, right edge for distance < 0). Each round rotates the
/// selection to the far zone edge and then shuttles the window after it, so
/// exactly ceil(|distance| / (Z - k)) Shuttle events are emitted, each
/// preceded by its swap network; the final shuttle is clamped (and dropped
/// if fully clamped) when the window reaches the end of the tape. For
/// k = Z/2 each swap network degenerates to Z/2 disjoint exchanges.
///
/// Throws std::invalid_argument if the selection is empty, not contiguous,
/// not at the trailing zone edge, has k >= Z, or would push any ion off the
/// tape. distance == 0 is a no-op.
MoveResult move_selected(const TapeState& state,
                         const std::vector<int>& selected_positions,
                         int distance);

/// Brings all of a block's qubits into one zone-sized window and leaves the
/// head over them. Blocks whose positions already span at most Z slots are
/// handled by a single window relocation; otherwise the qubits left and
/// right of the median position are plowed toward it in cohorts of at most
/// floor(Z/2) ions, one window-width stride per shuttle.
MoveResult gather_block(const TapeState& state, const Block& block);

/// Block-ordered scheduling: executes each block on the fast path when its
/// qubits already sit in the window, otherwise gathers them first. A Cool
/// event follows every Shuttle. Throws std::invalid_argument if
/// c.n_qubits < zone_size or the blocks disagree with the circuit.
Schedule schedule_blocks(const std::vector<Block>& blocks, const Circuit& c,
                         int zone_size);

/// Gate-at-a-time mapping baseline: drains executable frontier gates, drags
/// an in-zone operand toward its partner one swap at a time when a gate
/// spans at least Z positions, and otherwise relocates the window over the
/// stalled gate. Same validity contract as schedule_blocks; no shuttle-count
/// bound is claimed.
Schedule schedule_baseline(const Circuit& c, int zone_size);

}  // namespace tilt
