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

#include "tilt/schedule.hpp"
#include "tilt/verifier.hpp"

namespace tilt {

/// Two-qubit gate implementations with distance-linear durations (µs):
/// DuanAM 100d - 22, TroutAM 38d + 10, PM 5d + 160.
enum class GateTimeModel { DuanAM, TroutAM, PM };

GateTimeModel gate_time_model_from_name(const std::string& name);
std::string to_string(GateTimeModel model);

/// Duration of a two-qubit gate between ions `distance` positions apart.
/// Throws std::invalid_argument for distance < 1.
double gate_time_us(GateTimeModel model, int distance);

struct TimingParams {
  double t1_initial_cooling_us = 10050.0;  // 10 ms Doppler + 50 µs sideband
  double cool_per_shuttle_us = 40.0;
  double t3_readout_us = 150.0;
  double shuttle_speed_um_per_us = 1.0;
  // Position-to-length scale for the shuttle-distance term; not fixed by the
  // device model, so it is configurable and reported prominently.
  double ion_pitch_um = 5.0;
};

struct FidelityParams {
  double eps_laser = 1.0 / 256000.0;
  double eps_shuttle = 0.001;
  // When set, cooling is taken to reset the shuttle error index, so every
  // shuttle contributes the m = 1 factor instead of an accumulating one.
  bool reset_shuttle_index = false;
};

struct ExecutionReport {
  double t_exec_us = 0.0;
  double shuttle_transport_us = 0.0;
  double gate_us = 0.0;
  double t1_us = 0.0;
  double t2_cooling_us = 0.0;
  double t3_us = 0.0;
  long depth_layers = 0;
};

/// t_exec = dist*pitch/v + sum over depth layers of the layer's longest gate
/// + t1 + 40*S + t3. Layers are greedy ASAP over two-qubit gates and swaps;
/// gates on disjoint positions between consecutive shuttles share a layer,
/// and every shuttle is a barrier. Single-qubit gates are free. Requires a
/// passing verification report (throws std::invalid_argument otherwise); the
/// report's recomputed metrics are the ones used.
ExecutionReport execution_time(const Schedule& s,
                               const VerificationReport& verification,
                               GateTimeModel model, const TimingParams& p);

/// (1 - eps_laser N^2)^g * prod_{m=1..S} (1 - eps_shuttle m), clamped to 0
/// if any factor is nonpositive. g must count inserted swap gates too.
double success_rate(long two_qubit_gates_including_swaps, long shuttles,
                    int zone_ion_count, const FidelityParams& f);

/// Convenience overload: g = metrics g + inserted swaps from the schedule.
double success_rate(const Schedule& s, const FidelityParams& f,
                    int zone_ion_count);

}  // namespace tilt
