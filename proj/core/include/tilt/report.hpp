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

#include <json.hpp>

#include "tilt/blocking.hpp"
#include "tilt/costmodel.hpp"
#include "tilt/schedule.hpp"
#include "tilt/verifier.hpp"

namespace tilt {

using Json = nlohmann::ordered_json;

/// Schedule file format: geometry, the event stream as
/// {seq, kind, args...}, the summary block {S, swaps, dist, g, L, Z, n} and
/// the final qubit->position map. Byte-stable for identical schedules.
Json schedule_to_json(const Schedule& s);
Schedule schedule_from_json(const Json& j);

Json verification_to_json(const VerificationReport& r);
Json blocks_to_json(const std::vector<Block>& blocks);
Json execution_report_to_json(const ExecutionReport& r, GateTimeModel model);

/// One sweep result cell. compile_ms covers blocking + scheduling only.
struct SweepRow {
  std::string app;
  int n = 0;
  int zone = 0;
  std::string algo;
  std::string model;
  long shuttles = 0;
  long swaps = 0;
  long dist = 0;
  long two_qubit_gates = 0;
  long blocks = 0;
  double t_exec_us = 0.0;
  double success = 0.0;
  double compile_ms = 0.0;
};

std::string csv_header();
std::string csv_row(const SweepRow& row);

}  // namespace tilt
