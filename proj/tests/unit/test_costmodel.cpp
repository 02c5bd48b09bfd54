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

#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "tilt/benchgen.hpp"
#include "tilt/blocking.hpp"
#include "tilt/costmodel.hpp"
#include "tilt/depgraph.hpp"
#include "tilt/scheduler.hpp"

using namespace tilt;
using tilt::testing::pairs_circuit;

TEST_CASE("gate time models at unit distance") {
  CHECK(gate_time_us(GateTimeModel::TroutAM, 1) == doctest::Approx(48.0));
  CHECK(gate_time_us(GateTimeModel::DuanAM, 1) == doctest::Approx(78.0));
  CHECK(gate_time_us(GateTimeModel::PM, 1) == doctest::Approx(165.0));
  CHECK_THROWS_AS(gate_time_us(GateTimeModel::PM, 0), std::invalid_argument);
}

TEST_CASE("pm beats trout exactly from distance five") {
  CHECK(gate_time_us(GateTimeModel::PM, 4) >
        gate_time_us(GateTimeModel::TroutAM, 4));
  for (int d = 5; d <= 64; ++d) {
    CHECK(gate_time_us(GateTimeModel::PM, d) <
          gate_time_us(GateTimeModel::TroutAM, d));
  }
}

TEST_CASE("empty schedule costs initial cooling plus readout") {
  Circuit c;
  c.n_qubits = 16;
  Schedule s;
  s.n = 16;
  s.zone = 8;
  VerificationReport r = verify(c, s, 8);
  REQUIRE(r.valid);
  ExecutionReport report =
      execution_time(s, r, GateTimeModel::TroutAM, TimingParams{});
  CHECK(report.t_exec_us == doctest::Approx(10200.0));
}

TEST_CASE("one ten-slot shuttle at default pitch") {
  Circuit c;
  c.n_qubits = 32;
  Schedule s;
  s.n = 32;
  s.zone = 16;
  s.events.push_back(ScheduleEvent::shuttle(10));
  s.events.push_back(ScheduleEvent::cool());
  s.metrics.shuttles = 1;
  s.metrics.shuttle_distance = 10;
  VerificationReport r = verify(c, s, 16);
  REQUIRE(r.valid);
  ExecutionReport report =
      execution_time(s, r, GateTimeModel::TroutAM, TimingParams{});
  CHECK(report.t_exec_us == doctest::Approx(10290.0));
  CHECK(report.shuttle_transport_us == doctest::Approx(50.0));
  CHECK(report.t2_cooling_us == doctest::Approx(40.0));
}

TEST_CASE("unverified schedules are refused") {
  Circuit c = pairs_circuit(8, {{0, 1}});
  Schedule s;  // empty: never executes the gate
  s.n = 8;
  s.zone = 4;
  VerificationReport r = verify(c, s, 4);
  REQUIRE_FALSE(r.valid);
  CHECK_THROWS_AS(execution_time(s, r, GateTimeModel::TroutAM, TimingParams{}),
                  std::invalid_argument);
}

TEST_CASE("success rate basics") {
  FidelityParams f;
  CHECK(success_rate(0, 0, 16, f) == doctest::Approx(1.0));
  // One gate in a 16-ion zone: 1 - 256/256000 = 0.999.
  CHECK(success_rate(1, 0, 16, f) == doctest::Approx(0.999));
  // Enough shuttles drive a factor to zero and clamp the product.
  CHECK(success_rate(0, 1000, 16, f) == doctest::Approx(0.0));
}

TEST_CASE("published fidelity cross-check") {
  FidelityParams f;
  double rate = success_rate(4368, 48, 16, f);
  CHECK(rate >= 3.5e-3);
  CHECK(rate <= 4.5e-3);
}

TEST_CASE("shuttle index reset variant multiplies the first factor") {
  FidelityParams f;
  f.reset_shuttle_index = true;
  double expected = 1.0;
  for (int i = 0; i < 10; ++i) {
    expected *= 1.0 - f.eps_shuttle;
  }
  CHECK(success_rate(0, 10, 16, f) == doctest::Approx(expected));
}

TEST_CASE("success rate decreases in gates, shuttles and zone ions") {
  FidelityParams f;
  CHECK(success_rate(101, 10, 16, f) < success_rate(100, 10, 16, f));
  CHECK(success_rate(100, 11, 16, f) < success_rate(100, 10, 16, f));
  CHECK(success_rate(100, 10, 17, f) < success_rate(100, 10, 16, f));
}

TEST_CASE("execution time increases in distance and shuttles") {
  Circuit c;
  c.n_qubits = 32;
  auto cost = [&c](int shuttles, int dist_each) {
    Schedule s;
    s.n = 32;
    s.zone = 16;
    int head = 0;
    for (int i = 0; i < shuttles; ++i) {
      int delta = head == 0 ? dist_each : -dist_each;
      head += delta;
      s.events.push_back(ScheduleEvent::shuttle(delta));
      s.events.push_back(ScheduleEvent::cool());
    }
    VerificationReport r = verify(c, s, 16);
    REQUIRE(r.valid);
    return execution_time(s, r, GateTimeModel::TroutAM, TimingParams{})
        .t_exec_us;
  };
  CHECK(cost(2, 10) > cost(2, 5));
  CHECK(cost(4, 10) > cost(2, 10));
}

TEST_CASE("the m-th shuttle loses at least as much as m gates") {
  FidelityParams f;
  double gate = 1.0 - f.eps_laser * 16.0 * 16.0;
  for (long m = 1; m <= 100; ++m) {
    double shuttle_factor = 1.0 - f.eps_shuttle * static_cast<double>(m);
    double gates_factor = std::pow(gate, static_cast<double>(m));
    if (m == 1) {
      CHECK(shuttle_factor == doctest::Approx(gates_factor));
    } else {
      CHECK(shuttle_factor < gates_factor);
    }
  }
}

TEST_CASE("qft execution time magnitude under the trout model") {
  // Paper-scale gate count: controlled-phase pairs expanded to CX pairs.
  Circuit c = decompose_cp_to_cx(generate_benchmark("qft", 64));
  std::vector<Block> blocks = tilt_blocking(c, 16);
  Schedule s = schedule_blocks(blocks, c, 16);
  VerificationReport r = verify(c, s, 16);
  REQUIRE(r.valid);
  ExecutionReport report =
      execution_time(s, r, GateTimeModel::TroutAM, TimingParams{});
  CHECK(report.t_exec_us >= 0.2e6);
  CHECK(report.t_exec_us <= 1.0e6);
}

TEST_CASE("layer count bounds the dependency depth from below") {
  Circuit c = generate_benchmark("qft", 20);
  std::vector<Block> blocks = tilt_blocking(c, 8);
  Schedule s = schedule_blocks(blocks, c, 8);
  VerificationReport r = verify(c, s, 8);
  REQUIRE(r.valid);
  ExecutionReport report =
      execution_time(s, r, GateTimeModel::TroutAM, TimingParams{});
  // Longest path in the two-qubit dependency DAG.
  DependencyGraph dg = build_dependency_graph(c);
  std::vector<long> depth(c.gates.size(), 0);
  long longest = 0;
  while (!dg.frontier_empty()) {
    int g = dg.pop_frontier();
    long mine = depth[g] + (c.gates[g].is_two_qubit() ? 1 : 0);
    longest = std::max(longest, mine);
    for (int succ : dg.successors[g]) {
      depth[succ] = std::max(depth[succ], mine);
    }
    dg.complete(g);
  }
  CHECK(report.depth_layers >= longest);
}
