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

#include "tilt/blocking.hpp"

#include <algorithm>
#include <stdexcept>

#include "tilt/depgraph.hpp"

namespace tilt {

namespace {

struct Group {
  std::vector<int> gate_ids;
  std::vector<QubitId> qubits;  // sorted
  bool live = false;
};

class GroupTable {
 public:
  GroupTable(int n_qubits) : qubit_ref_(n_qubits, -1) {}

  [[nodiscard]] int ref(QubitId q) const { return qubit_ref_[q]; }
  [[nodiscard]] Group& group(int idx) { return groups_[idx]; }

  int create(QubitId q) {
    groups_.push_back(Group{{}, {q}, true});
    int idx = static_cast<int>(groups_.size()) - 1;
    qubit_ref_[q] = idx;
    return idx;
  }

  /// Sorted union of the groups referenced by a and b plus {a, b} itself.
  std::vector<QubitId> merged_qubits(QubitId a, QubitId b) const {
    std::vector<QubitId> out;
    auto add = [&out](QubitId q) {
      auto it = std::lower_bound(out.begin(), out.end(), q);
      if (it == out.end() || *it != q) {
        out.insert(it, q);
      }
    };
    if (qubit_ref_[a] >= 0) {
      for (QubitId q : groups_[qubit_ref_[a]].qubits) {
        add(q);
      }
    } else {
      add(a);
    }
    if (qubit_ref_[b] >= 0 && qubit_ref_[b] != qubit_ref_[a]) {
      for (QubitId q : groups_[qubit_ref_[b]].qubits) {
        add(q);
      }
    } else {
      add(b);
    }
    return out;
  }

  /// Merges the groups behind a and b (creating as needed) and returns the
  /// surviving group index. Gate lists concatenate as G(a) then G(b); the
  /// caller appends the merging gate afterwards.
  int merge(QubitId a, QubitId b, std::vector<QubitId> union_qubits) {
    int ga = qubit_ref_[a];
    int gb = qubit_ref_[b];
    if (ga >= 0 && ga == gb) {
      return ga;
    }
    int target;
    if (ga >= 0) {
      target = ga;
      if (gb >= 0) {
        Group& from = groups_[gb];
        Group& to = groups_[target];
        to.gate_ids.insert(to.gate_ids.end(), from.gate_ids.begin(),
                           from.gate_ids.end());
        from.live = false;
        from.gate_ids.clear();
      }
    } else if (gb >= 0) {
      target = gb;
    } else {
      groups_.push_back(Group{{}, {}, true});
      target = static_cast<int>(groups_.size()) - 1;
    }
    groups_[target].qubits = std::move(union_qubits);
    for (QubitId q : groups_[target].qubits) {
      qubit_ref_[q] = target;
    }
    return target;
  }

  /// Largest live group; ties broken toward the smallest minimum qubit
  /// index. Returns -1 when no group is live.
  [[nodiscard]] int largest_live() const {
    int best = -1;
    for (int i = 0; i < static_cast<int>(groups_.size()); ++i) {
      const Group& g = groups_[i];
      if (!g.live) {
        continue;
      }
      if (best < 0 || g.qubits.size() > groups_[best].qubits.size() ||
          (g.qubits.size() == groups_[best].qubits.size() &&
           g.qubits.front() < groups_[best].qubits.front())) {
        best = i;
      }
    }
    return best;
  }

  void retire(int idx) {
    Group& g = groups_[idx];
    for (QubitId q : g.qubits) {
      if (qubit_ref_[q] == idx) {
        qubit_ref_[q] = -1;
      }
    }
    g.live = false;
  }

  [[nodiscard]] bool any_live() const {
    return std::any_of(groups_.begin(), groups_.end(),
                       [](const Group& g) { return g.live; });
  }

  /// Live groups in qubit-scan order, for the residual flush.
  [[nodiscard]] std::vector<int> live_in_qubit_order() const {
    std::vector<int> out;
    std::vector<bool> seen(groups_.size(), false);
    for (QubitId q = 0; q < static_cast<QubitId>(qubit_ref_.size()); ++q) {
      int idx = qubit_ref_[q];
      if (idx >= 0 && !seen[idx]) {
        seen[idx] = true;
        out.push_back(idx);
      }
    }
    return out;
  }

 private:
  std::vector<int> qubit_ref_;
  std::vector<Group> groups_;
};

}  // namespace

std::vector<Block> tilt_blocking(const Circuit& c, int zone_size,
                                 FrontierStrategy) {
  if (zone_size < 2) {
    throw std::invalid_argument(
        "zone size must be at least 2 to host a two-qubit gate");
  }
  DependencyGraph dg = build_dependency_graph(c);
  GroupTable table(c.n_qubits);
  std::vector<Block> blocks;
  std::deque<int> waiting;

  auto emit = [&blocks, &table](int group_idx) {
    Group& g = table.group(group_idx);
    Block b;
    b.id = static_cast<int>(blocks.size());
    b.gate_ids = std::move(g.gate_ids);
    b.qubits = g.qubits;
    blocks.push_back(std::move(b));
    table.retire(group_idx);
  };

  while (!dg.frontier_empty()) {
    int gate_id = dg.pop_frontier();
    const Gate& g = c.gates[gate_id];
    if (!g.is_two_qubit()) {
      int idx = table.ref(g.q0) >= 0 ? table.ref(g.q0) : table.create(g.q0);
      table.group(idx).gate_ids.push_back(gate_id);
      dg.complete(gate_id);
    } else {
      std::vector<QubitId> merged = table.merged_qubits(g.q0, g.q1);
      if (static_cast<int>(merged.size()) <= zone_size) {
        int idx = table.merge(g.q0, g.q1, std::move(merged));
        table.group(idx).gate_ids.push_back(gate_id);
        dg.complete(gate_id);
      } else {
        waiting.push_back(gate_id);
      }
    }
    if (dg.frontier_empty()) {
      int p = table.largest_live();
      if (p >= 0) {
        emit(p);
      }
      while (!waiting.empty()) {
        dg.enqueue(waiting.front());
        waiting.pop_front();
      }
    }
  }
  for (int idx : table.live_in_qubit_order()) {
    emit(idx);
  }
  return blocks;
}

BlockStats block_stats(const std::vector<Block>& blocks, int zone_size) {
  BlockStats stats;
  stats.count = blocks.size();
  if (blocks.empty()) {
    return stats;
  }
  double qubit_sum = 0.0;
  double vacancy_sum = 0.0;
  for (const Block& b : blocks) {
    qubit_sum += static_cast<double>(b.qubits.size());
    vacancy_sum += static_cast<double>(zone_size - b.qubits.size()) /
                   static_cast<double>(zone_size);
  }
  stats.mean_qubits = qubit_sum / static_cast<double>(blocks.size());
  stats.vacancy_rate = vacancy_sum / static_cast<double>(blocks.size());
  return stats;
}

}  // namespace tilt
