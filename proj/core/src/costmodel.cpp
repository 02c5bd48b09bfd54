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

#include "tilt/costmodel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace tilt {

GateTimeModel gate_time_model_from_name(const std::string& name) {
  if (name == "duan") {
    return GateTimeModel::DuanAM;
  }
  if (name == "trout") {
    return GateTimeModel::TroutAM;
  }
  if (name == "pm") {
    return GateTimeModel::PM;
  }
  throw std::invalid_argument("unknown gate-time model '" + name + "'");
}

std::string to_string(GateTimeModel model) {
  switch (model) {
    case GateTimeModel::DuanAM:
      return "duan";
    case GateTimeModel::TroutAM:
      return "trout";
    case GateTimeModel::PM:
      return "pm";
  }
  return "?";
}

double gate_time_us(GateTimeModel model, int distance) {
  if (distance < 1) {
    throw std::invalid_argument("ion distance must be at least 1");
  }
  double d = distance;
  switch (model) {
    case GateTimeModel::DuanAM:
      return 100.0 * d - 22.0;
    case GateTimeModel::TroutAM:
      return 38.0 * d + 10.0;
    case GateTimeModel::PM:
      return 5.0 * d + 160.0;
  }
  throw std::invalid_argument("unknown gate-time model");
}

ExecutionReport execution_time(const Schedule& s,
                               const VerificationReport& verification,
                               GateTimeModel model, const TimingParams& p) {
  if (!verification.valid) {
    throw std::invalid_argument(
        "execution_time requires a verified schedule");
  }
  ExecutionReport report;

  // Greedy ASAP layering. Shuttles are barriers; between them, two-qubit
  // gates and swaps on disjoint positions share a layer.
  std::vector<double> layer_time;
  std::vector<long> busy_until(s.n, 0);
  long barrier = 0;
  for (const ScheduleEvent& e : s.events) {
    if (e.kind == EventKind::Shuttle) {
      barrier = static_cast<long>(layer_time.size());
      continue;
    }
    if (e.kind == EventKind::Cool) {
      continue;
    }
    bool two_qubit = e.kind == EventKind::ApplySwap ||
                     (e.kind == EventKind::ApplyGate && e.pos1 >= 0);
    if (!two_qubit) {
      continue;  // single-qubit gates are excluded from the time model
    }
    long layer = std::max({barrier, busy_until[e.pos0], busy_until[e.pos1]});
    if (layer >= static_cast<long>(layer_time.size())) {
      layer_time.resize(layer + 1, 0.0);
    }
    int distance = std::abs(e.pos1 - e.pos0);
    layer_time[layer] = std::max(layer_time[layer],
                                 gate_time_us(model, distance));
    busy_until[e.pos0] = layer + 1;
    busy_until[e.pos1] = layer + 1;
  }

  const ScheduleMetrics& m = verification.metrics;
  report.depth_layers = static_cast<long>(layer_time.size());
  for (double t : layer_time) {
    report.gate_us += t;
  }
  report.shuttle_transport_us = static_cast<double>(m.shuttle_distance) *
                                p.ion_pitch_um / p.shuttle_speed_um_per_us;
  report.t1_us = p.t1_initial_cooling_us;
  report.t2_cooling_us =
      p.cool_per_shuttle_us * static_cast<double>(m.shuttles);
  report.t3_us = p.t3_readout_us;
  report.t_exec_us = report.shuttle_transport_us + report.gate_us +
                     report.t1_us + report.t2_cooling_us + report.t3_us;
  return report;
}

double success_rate(long two_qubit_gates_including_swaps, long shuttles,
                    int zone_ion_count, const FidelityParams& f) {
  if (zone_ion_count < 1) {
    throw std::invalid_argument("zone ion count must be positive");
  }
  double n_ions = zone_ion_count;
  double gate_fidelity = 1.0 - f.eps_laser * n_ions * n_ions;
  if (gate_fidelity <= 0.0 && two_qubit_gates_including_swaps > 0) {
    return 0.0;
  }
  double rate = std::pow(gate_fidelity,
                         static_cast<double>(two_qubit_gates_including_swaps));
  for (long m = 1; m <= shuttles; ++m) {
    double factor =
        1.0 - f.eps_shuttle * static_cast<double>(f.reset_shuttle_index ? 1 : m);
    if (factor <= 0.0) {
      return 0.0;
    }
    rate *= factor;
  }
  return rate;
}

double success_rate(const Schedule& s, const FidelityParams& f,
                    int zone_ion_count) {
  return success_rate(s.metrics.two_qubit_gates + s.metrics.swaps,
                      s.metrics.shuttles, zone_ion_count, f);
}

}  // namespace tilt
