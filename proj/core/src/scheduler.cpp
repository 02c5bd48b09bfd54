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

#include "tilt/scheduler.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <iterator>
#include <map>
#include <stdexcept>

#include "tilt/depgraph.hpp"

namespace tilt {

namespace {

int clamp_int(int v, int lo, int hi) { return std::max(lo, std::min(v, hi)); }

class Emitter {
 public:
  Emitter(int n, int zone) : ts_(n, zone) {}
  explicit Emitter(const TapeState& ts) : ts_(ts) {}

  [[nodiscard]] const TapeState& state() const { return ts_; }
  [[nodiscard]] int head() const { return ts_.head(); }
  [[nodiscard]] int n() const { return ts_.n(); }
  [[nodiscard]] int zone() const { return ts_.zone_size(); }

  void shuttle_by(int delta, int moved_ions = 0) {
    ts_.move_head(delta);
    events_.push_back(ScheduleEvent::shuttle(delta, moved_ions));
    events_.push_back(ScheduleEvent::cool());
    ++metrics_.shuttles;
    metrics_.shuttle_distance += std::abs(delta);
  }

  void shuttle_to(int target_head, int moved_ions = 0) {
    if (target_head != ts_.head()) {
      shuttle_by(target_head - ts_.head(), moved_ions);
    }
  }

  void swap(int a, int b) {
    ts_.swap_positions(a, b);
    events_.push_back(ScheduleEvent::swap(a, b));
    ++metrics_.swaps;
  }

  void gate(const Gate& g) {
    int p0 = ts_.position_of(g.q0);
    int p1 = -1;
    if (!ts_.in_zone(p0)) {
      throw std::logic_error("scheduler emitted a gate outside the zone");
    }
    if (g.is_two_qubit()) {
      p1 = ts_.position_of(g.q1);
      if (!ts_.in_zone(p1)) {
        throw std::logic_error("scheduler emitted a gate outside the zone");
      }
      ++metrics_.two_qubit_gates;
    }
    events_.push_back(ScheduleEvent::gate(g.id, p0, p1));
  }

  /// Applies a position permutation (content at p moves to sigma[p]) as its
  /// minimum-transposition cycle decomposition. Fixed points may be present
  /// and are skipped.
  void permute(const std::map<int, int>& sigma) {
    std::map<int, bool> done;
    for (const auto& [start, unused] : sigma) {
      if (done[start]) {
        continue;
      }
      std::vector<int> cycle;
      int x = start;
      while (!done[x]) {
        done[x] = true;
        cycle.push_back(x);
        x = sigma.at(x);
      }
      for (std::size_t j = 1; j < cycle.size(); ++j) {
        swap(cycle[0], cycle[j]);
      }
    }
  }

  std::vector<ScheduleEvent> take_events() { return std::move(events_); }
  [[nodiscard]] const ScheduleMetrics& metrics() const { return metrics_; }

 private:
  TapeState ts_;
  std::vector<ScheduleEvent> events_;
  ScheduleMetrics metrics_;
};

/// Moves the ions currently at `from` onto the slot set `to` (same size).
/// Ions already sitting on a target slot stay put; the rest map to the
/// remaining target slots in ascending order, and displaced bystanders fill
/// the vacated slots ascending, so the permutation has as many fixed points
/// as the slot sets allow.
void realize_assignment(Emitter& em, const std::vector<int>& from,
                        const std::vector<int>& to) {
  assert(from.size() == to.size());
  std::vector<int> sources = from;
  std::vector<int> targets = to;
  std::sort(sources.begin(), sources.end());
  std::sort(targets.begin(), targets.end());
  std::vector<int> moving;
  std::vector<int> open;
  std::set_difference(sources.begin(), sources.end(), targets.begin(),
                      targets.end(), std::back_inserter(moving));
  std::set_difference(targets.begin(), targets.end(), sources.begin(),
                      sources.end(), std::back_inserter(open));
  assert(moving.size() == open.size());
  std::map<int, int> sigma;
  for (std::size_t i = 0; i < moving.size(); ++i) {
    sigma[moving[i]] = open[i];  // cohort ion into an open target slot
    sigma[open[i]] = moving[i];  // bystander out to the vacated slot
  }
  em.permute(sigma);
}

/// Moves a cohort of ions so they end up in the slot run
/// [first_slot, first_slot + k), ascending by current position, and leaves
/// the head at stop_h. dir = +1 sweeps the window rightward carrying the
/// absorbed clump at the right zone edge; dir = -1 mirrors it.
///
/// Slots at `fence` and beyond it (in the sweep direction) are protected:
/// the median ion and the already-placed opposite cohort live there, so the
/// traveling clump is parked short of the fence and the stride is capped so
/// the clump survives each window move.
///
/// With settle_head false the plow returns as soon as its cohort rests on
/// its final slots, leaving the head wherever absorption finished; the
/// caller is then responsible for walking the head to stop_h.
void plow(Emitter& em, const std::vector<QubitId>& cohort, int dir,
          int first_slot, int stop_h, int fence, bool settle_head = true) {
  if (cohort.empty()) {
    return;
  }
  const int n = em.n();
  const int zone = em.zone();
  const int k = static_cast<int>(cohort.size());
  assert(k <= zone / 2);

  auto cohort_positions = [&]() {
    std::vector<int> ps;
    ps.reserve(cohort.size());
    for (QubitId q : cohort) {
      ps.push_back(em.state().position_of(q));
    }
    std::sort(ps.begin(), ps.end());
    return ps;
  };

  {
    std::vector<int> ps = cohort_positions();
    if (dir > 0) {
      if (ps.front() < em.head()) {
        em.shuttle_to(clamp_int(ps.front(), 0, n - zone));
      }
    } else {
      int hi = ps.back();
      if (hi < em.head() || hi >= em.head() + zone || em.head() < stop_h) {
        em.shuttle_to(std::max(stop_h, hi - zone + 1));
      }
    }
  }

  for (int iter = 0; iter <= 2 * n + 4; ++iter) {
    int h = em.head();
    std::vector<int> inwin;
    for (int p : cohort_positions()) {
      if (em.state().in_zone(p)) {
        inwin.push_back(p);
      }
    }
    int c = static_cast<int>(inwin.size());
    if (h == stop_h) {
      if (c != k) {
        throw std::logic_error("plow ended before absorbing its cohort");
      }
      std::vector<int> slots(k);
      for (int i = 0; i < k; ++i) {
        slots[i] = first_slot + i;
      }
      realize_assignment(em, inwin, slots);
      return;
    }
    if (c == k && first_slot >= h && first_slot + k <= h + zone) {
      // Fully absorbed and the destination run is already inside the
      // window: park the cohort in place.
      std::vector<int> slots(k);
      for (int i = 0; i < k; ++i) {
        slots[i] = first_slot + i;
      }
      realize_assignment(em, inwin, slots);
      if (!settle_head) {
        return;
      }
      em.shuttle_to(stop_h, k);
      continue;
    }
    std::vector<int> clump(c);
    int delta;
    if (dir > 0) {
      int end = std::min(h + zone, fence);
      for (int i = 0; i < c; ++i) {
        clump[i] = end - c + i;
      }
      delta = std::min(stop_h - h, end - c - h);
    } else {
      int start = std::max(h, fence + 1);
      for (int i = 0; i < c; ++i) {
        clump[i] = start + i;
      }
      delta = -std::min(h - stop_h, (h + zone) - start - c);
    }
    if (delta == 0) {
      throw std::logic_error("plow stalled");
    }
    realize_assignment(em, inwin, clump);
    em.shuttle_by(delta, c);
  }
  throw std::logic_error("plow failed to converge");
}

void gather_into_zone(Emitter& em, const Block& b) {
  const int n = em.n();
  const int zone = em.zone();
  std::vector<int> positions;
  positions.reserve(b.qubits.size());
  for (QubitId q : b.qubits) {
    positions.push_back(em.state().position_of(q));
  }
  std::sort(positions.begin(), positions.end());
  bool covered = std::all_of(positions.begin(), positions.end(),
                             [&](int p) { return em.state().in_zone(p); });
  if (covered) {
    return;
  }
  int pmin = positions.front();
  int pmax = positions.back();
  if (pmax - pmin <= zone - 1) {
    em.shuttle_to(clamp_int(em.head(), std::max(0, pmax - zone + 1),
                            std::min(pmin, n - zone)));
    return;
  }

  int median = positions[(positions.size() - 1) / 2];
  std::vector<std::pair<int, QubitId>> by_pos;
  for (QubitId q : b.qubits) {
    by_pos.emplace_back(em.state().position_of(q), q);
  }
  std::sort(by_pos.begin(), by_pos.end());
  std::vector<QubitId> left;
  std::vector<QubitId> right;
  for (const auto& [p, q] : by_pos) {
    if (p < median) {
      left.push_back(q);
    } else if (p > median) {
      right.push_back(q);
    }
  }
  int run_lo = median - static_cast<int>(left.size());
  int exec_head = clamp_int(run_lo, 0, n - zone);
  // The plows are confined to opposite sides of the median, so they
  // commute; start with the cohort whose first pickup is already covered to
  // save a placement shuttle, and let only the second plow walk the head to
  // the execution position.
  bool right_first =
      !right.empty() &&
      em.state().in_zone(em.state().position_of(right.back())) &&
      (left.empty() ||
       !em.state().in_zone(em.state().position_of(left.front())));
  if (right_first) {
    plow(em, right, -1, median + 1, exec_head, median, left.empty());
    plow(em, left, +1, run_lo, exec_head, median);
  } else {
    plow(em, left, +1, run_lo, exec_head, median, right.empty());
    plow(em, right, -1, median + 1, exec_head, median);
  }
  em.shuttle_to(exec_head);
}

void check_partition(const std::vector<Block>& blocks, const Circuit& c) {
  std::vector<bool> seen(c.gates.size(), false);
  std::size_t total = 0;
  for (const Block& b : blocks) {
    for (int gid : b.gate_ids) {
      if (gid < 0 || gid >= static_cast<int>(c.gates.size()) || seen[gid]) {
        throw std::invalid_argument("blocks do not partition the circuit");
      }
      seen[gid] = true;
      ++total;
    }
  }
  if (total != c.gates.size()) {
    throw std::invalid_argument("blocks do not partition the circuit");
  }
}

}  // namespace

MoveResult move_selected(const TapeState& state,
                         const std::vector<int>& selected_positions,
                         int distance) {
  const int n = state.n();
  const int zone = state.zone_size();
  std::vector<int> sel = selected_positions;
  std::sort(sel.begin(), sel.end());
  if (sel.empty()) {
    throw std::invalid_argument("empty selection");
  }
  const int k = static_cast<int>(sel.size());
  if (k >= zone) {
    throw std::invalid_argument("selection must be smaller than the zone");
  }
  for (int i = 0; i < k; ++i) {
    if (i > 0 && sel[i] != sel[i - 1] + 1) {
      throw std::invalid_argument("selection must be contiguous");
    }
  }
  Emitter em(state);
  if (distance == 0) {
    return MoveResult{em.take_events(), em.state()};
  }
  const int dir = distance > 0 ? 1 : -1;
  if (dir > 0) {
    if (sel.front() != state.head()) {
      throw std::invalid_argument(
          "selection must start at the trailing zone edge");
    }
    if (sel.back() + distance >= n) {
      throw std::invalid_argument("move would push an ion off the tape");
    }
  } else {
    if (sel.back() != state.head() + zone - 1) {
      throw std::invalid_argument(
          "selection must start at the trailing zone edge");
    }
    if (sel.front() + distance < 0) {
      throw std::invalid_argument("move would push an ion off the tape");
    }
  }

  int remaining = std::abs(distance);
  int sel_lo = sel.front();
  while (remaining > 0) {
    int advance = std::min(remaining, zone - k);
    std::map<int, int> sigma;
    if (dir > 0) {
      // rotate [sel_lo, sel_lo + k + advance): selection +advance, rest -k
      for (int p = sel_lo; p < sel_lo + k; ++p) {
        sigma[p] = p + advance;
      }
      for (int p = sel_lo + k; p < sel_lo + k + advance; ++p) {
        sigma[p] = p - k;
      }
    } else {
      int sel_hi = sel_lo + k - 1;
      for (int p = sel_lo; p <= sel_hi; ++p) {
        sigma[p] = p - advance;
      }
      for (int p = sel_lo - advance; p < sel_lo; ++p) {
        sigma[p] = p + k;
      }
    }
    em.permute(sigma);
    sel_lo += dir * advance;
    remaining -= advance;
    int target = clamp_int(em.head() + dir * advance, 0, n - zone);
    if (target != em.head()) {
      em.shuttle_by(target - em.head(), k);
    }
  }
  return MoveResult{em.take_events(), em.state()};
}

MoveResult gather_block(const TapeState& state, const Block& block) {
  Emitter em(state);
  gather_into_zone(em, block);
  return MoveResult{em.take_events(), em.state()};
}

Schedule schedule_blocks(const std::vector<Block>& blocks, const Circuit& c,
                         int zone_size) {
  c.validate();
  if (c.n_qubits < zone_size) {
    throw std::invalid_argument("zone is larger than the tape");
  }
  if (zone_size < 2 && c.two_qubit_gate_count() > 0) {
    throw std::invalid_argument("zone size must be at least 2");
  }
  check_partition(blocks, c);

  Emitter em(c.n_qubits, zone_size);
  for (const Block& b : blocks) {
    gather_into_zone(em, b);
    for (int gid : b.gate_ids) {
      em.gate(c.gates[gid]);
    }
  }

  Schedule s;
  s.n = c.n_qubits;
  s.zone = zone_size;
  s.algorithm = "boss";
  s.circuit_name = c.name;
  s.final_positions = em.state().positions();
  s.metrics = em.metrics();
  s.metrics.blocks = static_cast<long>(blocks.size());
  s.events = em.take_events();
  return s;
}

Schedule schedule_baseline(const Circuit& c, int zone_size) {
  c.validate();
  if (c.n_qubits < zone_size) {
    throw std::invalid_argument("zone is larger than the tape");
  }
  if (zone_size < 2 && c.two_qubit_gate_count() > 0) {
    throw std::invalid_argument("zone size must be at least 2");
  }
  const int n = c.n_qubits;
  DependencyGraph dg = build_dependency_graph(c);
  Emitter em(n, zone_size);

  auto executable = [&](const Gate& g) {
    if (!em.state().in_zone(em.state().position_of(g.q0))) {
      return false;
    }
    return !g.is_two_qubit() ||
           em.state().in_zone(em.state().position_of(g.q1));
  };
  auto drain = [&]() {
    std::size_t executed = 0;
    bool progressed = true;
    while (progressed) {
      progressed = false;
      for (auto it = dg.frontier.begin(); it != dg.frontier.end(); ++it) {
        const Gate& g = c.gates[*it];
        if (executable(g)) {
          dg.frontier.erase(it);
          em.gate(g);
          dg.complete(g.id);
          ++executed;
          progressed = true;
          break;
        }
      }
    }
    return executed;
  };

  std::size_t executed = 0;
  const std::size_t total = c.gates.size();
  long guard = 0;
  const long guard_max =
      64 + 32L * static_cast<long>(total) * static_cast<long>(n + 2);
  while (executed < total) {
    executed += drain();
    if (executed >= total) {
      break;
    }
    if (++guard > guard_max) {
      throw std::logic_error("baseline scheduler failed to make progress");
    }
    const Gate& g = c.gates[dg.frontier.front()];
    int p0 = em.state().position_of(g.q0);
    if (!g.is_two_qubit()) {
      em.shuttle_to(clamp_int(p0, 0, n - zone_size));
      continue;
    }
    int p1 = em.state().position_of(g.q1);
    int pin = -1;
    int pout = -1;
    if (em.state().in_zone(p0)) {
      pin = p0;
      pout = p1;
    } else if (em.state().in_zone(p1)) {
      pin = p1;
      pout = p0;
    }
    if (pin >= 0) {
      // One operand is in the zone: swap it a step toward its partner, or,
      // when it is pinned at the zone edge, slide the window a full stride
      // so the drag regains runway.
      int dir = pout > pin ? 1 : -1;
      if (em.state().in_zone(pin + dir)) {
        em.swap(pin, pin + dir);
        continue;
      }
      int target = dir > 0 ? clamp_int(pin, 0, n - zone_size)
                           : clamp_int(pin - zone_size + 1, 0, n - zone_size);
      em.shuttle_to(target);
      continue;
    }
    // Neither operand in the zone: relocate over both when they fit one
    // window, otherwise park the lower operand at the trailing edge and let
    // the drag take over.
    int lo = std::min(p0, p1);
    int hi = std::max(p0, p1);
    int floor_head =
        hi - lo <= zone_size - 1 ? std::max(0, hi - zone_size + 1) : 0;
    em.shuttle_to(clamp_int(lo, floor_head, n - zone_size));
  }

  Schedule s;
  s.n = n;
  s.zone = zone_size;
  s.algorithm = "baseline";
  s.circuit_name = c.name;
  s.final_positions = em.state().positions();
  s.metrics = em.metrics();
  s.events = em.take_events();
  return s;
}

}  // namespace tilt
