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

#include "tilt/verifier.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace tilt {

namespace {

std::string pos_str(int p) { return std::to_string(p); }

}  // namespace

VerificationReport verify(const Circuit& c, const Schedule& s,
                          int zone_size) {
  VerificationReport report;
  auto violate = [&report](std::size_t seq, const char* rule,
                           std::string detail) {
    report.violations.push_back(Violation{seq, rule, std::move(detail)});
  };

  const int n = c.n_qubits;
  if (s.n != n || s.zone != zone_size || zone_size < 1 || zone_size > n) {
    violate(0, "config",
            "schedule geometry does not match the circuit and zone");
    report.valid = false;
    return report;
  }

  // Per-qubit program order; the front of each queue is the next gate that
  // may touch that qubit.
  std::vector<std::deque<int>> next_on_qubit(n);
  for (const Gate& g : c.gates) {
    next_on_qubit[g.q0].push_back(g.id);
    if (g.is_two_qubit()) {
      next_on_qubit[g.q1].push_back(g.id);
    }
  }

  std::vector<int> ion_at(n);
  std::iota(ion_at.begin(), ion_at.end(), 0);
  std::vector<int> pos_of = ion_at;
  int head = 0;
  std::vector<char> executed(c.gates.size(), 0);
  bool cool_due = false;

  auto in_zone = [&](int p) { return p >= head && p < head + zone_size; };

  for (std::size_t seq = 0; seq < s.events.size(); ++seq) {
    const ScheduleEvent& e = s.events[seq];
    if (cool_due && e.kind != EventKind::Cool) {
      violate(seq, "cool", "shuttle not followed by a cool event");
      cool_due = false;
    }
    switch (e.kind) {
      case EventKind::Cool:
        if (!cool_due) {
          violate(seq, "cool", "cool event without a preceding shuttle");
        }
        cool_due = false;
        break;
      case EventKind::Shuttle: {
        if (e.delta == 0) {
          violate(seq, "head-range", "shuttle with zero delta");
          break;
        }
        head += e.delta;
        report.metrics.shuttles += 1;
        report.metrics.shuttle_distance += std::abs(e.delta);
        if (head < 0 || head > n - zone_size) {
          violate(seq, "head-range",
                  "head moved to " + pos_str(head) + ", outside [0, " +
                      pos_str(n - zone_size) + "]");
          head = std::clamp(head, 0, n - zone_size);
        }
        cool_due = true;
        break;
      }
      case EventKind::ApplySwap: {
        int a = e.pos0;
        int b = e.pos1;
        if (a < 0 || a >= n || b < 0 || b >= n || a == b) {
          violate(seq, "zone", "swap on invalid positions");
          break;
        }
        if (!in_zone(a) || !in_zone(b)) {
          violate(seq, "zone",
                  "swap at (" + pos_str(a) + ", " + pos_str(b) +
                      ") outside zone [" + pos_str(head) + ", " +
                      pos_str(head + zone_size) + ")");
        }
        std::swap(ion_at[a], ion_at[b]);
        pos_of[ion_at[a]] = a;
        pos_of[ion_at[b]] = b;
        report.metrics.swaps += 1;
        break;
      }
      case EventKind::ApplyGate: {
        if (e.gate_id < 0 ||
            e.gate_id >= static_cast<int>(c.gates.size())) {
          violate(seq, "coverage", "gate id out of range");
          break;
        }
        const Gate& g = c.gates[e.gate_id];
        if (executed[g.id]) {
          violate(seq, "coverage",
                  "gate " + std::to_string(g.id) + " executed twice");
          break;
        }
        int expect0 = pos_of[g.q0];
        if (e.pos0 != expect0) {
          violate(seq, "dependency",
                  "gate " + std::to_string(g.id) +
                      " recorded position does not hold its operand");
        }
        if (!in_zone(expect0)) {
          violate(seq, "zone",
                  "gate " + std::to_string(g.id) + " operand at " +
                      pos_str(expect0) + " outside the zone");
        }
        if (g.is_two_qubit()) {
          int expect1 = pos_of[g.q1];
          if (e.pos1 != expect1) {
            violate(seq, "dependency",
                    "gate " + std::to_string(g.id) +
                        " recorded position does not hold its operand");
          }
          if (!in_zone(expect1)) {
            violate(seq, "zone",
                    "gate " + std::to_string(g.id) + " operand at " +
                        pos_str(expect1) + " outside the zone");
          }
          report.metrics.two_qubit_gates += 1;
        }
        bool order_ok = !next_on_qubit[g.q0].empty() &&
                        next_on_qubit[g.q0].front() == g.id;
        if (g.is_two_qubit()) {
          order_ok = order_ok && !next_on_qubit[g.q1].empty() &&
                     next_on_qubit[g.q1].front() == g.id;
        }
        if (!order_ok) {
          violate(seq, "dependency",
                  "gate " + std::to_string(g.id) +
                      " executed before an earlier gate on its qubits");
          break;
        }
        next_on_qubit[g.q0].pop_front();
        if (g.is_two_qubit()) {
          next_on_qubit[g.q1].pop_front();
        }
        executed[g.id] = 1;
        break;
      }
    }
  }
  if (cool_due) {
    violate(s.events.size(), "cool", "schedule ends with an uncooled shuttle");
  }
  for (const Gate& g : c.gates) {
    if (!executed[g.id]) {
      violate(s.events.size(), "coverage",
              "gate " + std::to_string(g.id) + " never executed");
    }
  }
  if (!s.final_positions.empty() && s.final_positions != pos_of) {
    violate(s.events.size(), "final-state",
            "replayed qubit positions differ from the recorded final state");
  }
  report.metrics.blocks = s.metrics.blocks;
  report.valid = report.violations.empty();
  return report;
}

namespace {

// Packed (permutation, head) key for the oracle's visited map; 3 bits per
// ion position plus the head. Only used for n <= 6.
std::uint64_t pack_state(const std::vector<int>& ion_at, int head) {
  std::uint64_t key = head;
  for (int q : ion_at) {
    key = (key << 3) | static_cast<std::uint64_t>(q);
  }
  return key;
}

}  // namespace

int optimal_shuttles_bruteforce(const Circuit& c, int zone_size) {
  c.validate();
  const int n = c.n_qubits;
  const int num_gates = static_cast<int>(c.gates.size());
  if (n > 6 || zone_size > 3 || num_gates > 16) {
    throw std::invalid_argument(
        "instance too large for the brute-force oracle");
  }
  if (zone_size < 1 || zone_size > n) {
    throw std::invalid_argument("invalid zone size");
  }

  struct State {
    std::vector<int> ion_at;
    int head;
    std::uint32_t mask;
  };

  // Per-qubit predecessor masks for O(1) executability checks.
  std::vector<std::uint32_t> pred_mask(num_gates, 0);
  {
    std::vector<int> last(n, -1);
    for (const Gate& g : c.gates) {
      if (last[g.q0] >= 0) {
        pred_mask[g.id] |= 1u << last[g.q0];
      }
      last[g.q0] = g.id;
      if (g.is_two_qubit()) {
        if (last[g.q1] >= 0) {
          pred_mask[g.id] |= 1u << last[g.q1];
        }
        last[g.q1] = g.id;
      }
    }
  }
  const std::uint32_t full = num_gates == 32
                                 ? 0xffffffffu
                                 : (1u << num_gates) - 1u;

  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);

  std::unordered_map<std::uint64_t, std::unordered_map<std::uint32_t, int>>
      best;
  std::deque<State> queue;  // 0-1 BFS: free moves go to the front

  auto push = [&](State st, int cost, bool zero_cost) {
    std::uint64_t key = pack_state(st.ion_at, st.head);
    auto& per_mask = best[key];
    auto it = per_mask.find(st.mask);
    if (it != per_mask.end() && it->second <= cost) {
      return;
    }
    per_mask[st.mask] = cost;
    if (zero_cost) {
      queue.push_front(std::move(st));
    } else {
      queue.push_back(std::move(st));
    }
  };

  push(State{identity, 0, 0}, 0, true);
  while (!queue.empty()) {
    State st = std::move(queue.front());
    queue.pop_front();
    std::uint64_t key = pack_state(st.ion_at, st.head);
    int cost = best[key][st.mask];
    if (st.mask == full) {
      return cost;
    }
    std::vector<int> pos_of(n);
    for (int p = 0; p < n; ++p) {
      pos_of[st.ion_at[p]] = p;
    }
    auto in_zone = [&](int p) {
      return p >= st.head && p < st.head + zone_size;
    };
    // Free: execute any ready gate whose operands sit in the zone.
    for (const Gate& g : c.gates) {
      if ((st.mask >> g.id) & 1u) {
        continue;
      }
      if ((st.mask & pred_mask[g.id]) != pred_mask[g.id]) {
        continue;
      }
      if (!in_zone(pos_of[g.q0]) ||
          (g.is_two_qubit() && !in_zone(pos_of[g.q1]))) {
        continue;
      }
      State nxt = st;
      nxt.mask |= 1u << g.id;
      push(std::move(nxt), cost, true);
    }
    // Free: swap any two zone positions.
    for (int a = st.head; a < st.head + zone_size; ++a) {
      for (int b = a + 1; b < st.head + zone_size; ++b) {
        State nxt = st;
        std::swap(nxt.ion_at[a], nxt.ion_at[b]);
        push(std::move(nxt), cost, true);
      }
    }
    // One shuttle: move the head anywhere else.
    for (int h = 0; h <= n - zone_size; ++h) {
      if (h == st.head) {
        continue;
      }
      State nxt = st;
      nxt.head = h;
      push(std::move(nxt), cost + 1, false);
    }
  }
  throw std::logic_error("oracle search exhausted without executing all gates");
}

}  // namespace tilt
