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

#include "tilt/report.hpp"

#include <cstdio>
#include <stdexcept>

namespace tilt {

namespace {

const char* kind_name(EventKind k) {
  switch (k) {
    case EventKind::ApplyGate:
      return "gate";
    case EventKind::ApplySwap:
      return "swap";
    case EventKind::Shuttle:
      return "shuttle";
    case EventKind::Cool:
      return "cool";
  }
  return "?";
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string scientific(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*e", digits, v);
  return buf;
}

}  // namespace

Json schedule_to_json(const Schedule& s) {
  Json events = Json::array();
  for (std::size_t seq = 0; seq < s.events.size(); ++seq) {
    const ScheduleEvent& e = s.events[seq];
    Json je;
    je["seq"] = seq;
    je["kind"] = kind_name(e.kind);
    switch (e.kind) {
      case EventKind::ApplyGate:
        je["gate"] = e.gate_id;
        if (e.pos1 >= 0) {
          je["pos"] = Json::array({e.pos0, e.pos1});
        } else {
          je["pos"] = Json::array({e.pos0});
        }
        break;
      case EventKind::ApplySwap:
        je["pos"] = Json::array({e.pos0, e.pos1});
        break;
      case EventKind::Shuttle:
        je["delta"] = e.delta;
        je["ions"] = e.moved_ions;
        break;
      case EventKind::Cool:
        break;
    }
    events.push_back(std::move(je));
  }
  Json j;
  j["circuit"] = s.circuit_name;
  j["algo"] = s.algorithm;
  j["n"] = s.n;
  j["zone"] = s.zone;
  j["summary"] = Json{{"S", s.metrics.shuttles},
                      {"swaps", s.metrics.swaps},
                      {"dist", s.metrics.shuttle_distance},
                      {"g", s.metrics.two_qubit_gates},
                      {"L", s.metrics.blocks},
                      {"Z", s.zone},
                      {"n", s.n}};
  j["events"] = std::move(events);
  j["final_positions"] = s.final_positions;
  return j;
}

Schedule schedule_from_json(const Json& j) {
  Schedule s;
  s.circuit_name = j.value("circuit", "");
  s.algorithm = j.value("algo", "");
  s.n = j.at("n").get<int>();
  s.zone = j.at("zone").get<int>();
  const Json& summary = j.at("summary");
  s.metrics.shuttles = summary.at("S").get<long>();
  s.metrics.swaps = summary.at("swaps").get<long>();
  s.metrics.shuttle_distance = summary.at("dist").get<long>();
  s.metrics.two_qubit_gates = summary.at("g").get<long>();
  s.metrics.blocks = summary.at("L").get<long>();
  for (const Json& je : j.at("events")) {
    std::string kind = je.at("kind").get<std::string>();
    ScheduleEvent e;
    if (kind == "gate") {
      const Json& pos = je.at("pos");
      e = ScheduleEvent::gate(je.at("gate").get<int>(), pos.at(0).get<int>(),
                              pos.size() > 1 ? pos.at(1).get<int>() : -1);
    } else if (kind == "swap") {
      const Json& pos = je.at("pos");
      e = ScheduleEvent::swap(pos.at(0).get<int>(), pos.at(1).get<int>());
    } else if (kind == "shuttle") {
      e = ScheduleEvent::shuttle(je.at("delta").get<int>(),
                                 je.value("ions", 0));
    } else if (kind == "cool") {
      e = ScheduleEvent::cool();
    } else {
      throw std::invalid_argument("unknown event kind '" + kind + "'");
    }
    s.events.push_back(e);
  }
  if (j.contains("final_positions")) {
    s.final_positions = j.at("final_positions").get<std::vector<int>>();
  }
  return s;
}

Json verification_to_json(const VerificationReport& r) {
  Json violations = Json::array();
  for (const Violation& v : r.violations) {
    violations.push_back(Json{
        {"seq", v.event_seq}, {"rule", v.rule}, {"detail", v.detail}});
  }
  return Json{{"valid", r.valid},
              {"violations", std::move(violations)},
              {"metrics", Json{{"S", r.metrics.shuttles},
                               {"swaps", r.metrics.swaps},
                               {"dist", r.metrics.shuttle_distance},
                               {"g", r.metrics.two_qubit_gates},
                               {"L", r.metrics.blocks}}}};
}

Json blocks_to_json(const std::vector<Block>& blocks) {
  Json arr = Json::array();
  for (const Block& b : blocks) {
    arr.push_back(Json{
        {"id", b.id}, {"gate_ids", b.gate_ids}, {"qubits", b.qubits}});
  }
  return arr;
}

Json execution_report_to_json(const ExecutionReport& r, GateTimeModel model) {
  return Json{{"model", to_string(model)},
              {"t_exec_us", r.t_exec_us},
              {"breakdown", Json{{"shuttle_transport_us",
                                  r.shuttle_transport_us},
                                 {"gate_us", r.gate_us},
                                 {"t1_us", r.t1_us},
                                 {"t2_cooling_us", r.t2_cooling_us},
                                 {"t3_us", r.t3_us}}},
              {"depth_layers", r.depth_layers}};
}

std::string csv_header() {
  return "app,n,Z,algo,model,S,swaps,dist,g,L,t_exec_us,success_rate,"
         "compile_ms";
}

std::string csv_row(const SweepRow& row) {
  std::string out;
  out += row.app;
  out += ',' + std::to_string(row.n);
  out += ',' + std::to_string(row.zone);
  out += ',' + row.algo;
  out += ',' + row.model;
  out += ',' + std::to_string(row.shuttles);
  out += ',' + std::to_string(row.swaps);
  out += ',' + std::to_string(row.dist);
  out += ',' + std::to_string(row.two_qubit_gates);
  out += ',' + std::to_string(row.blocks);
  out += ',' + fixed(row.t_exec_us, 3);
  out += ',' + scientific(row.success, 6);
  out += ',' + fixed(row.compile_ms, 3);
  return out;
}

}  // namespace tilt
