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

#include <algorithm>

#include "helpers.hpp"
#include "tilt/benchgen.hpp"
#include "tilt/blocking.hpp"
#include "tilt/scheduler.hpp"
#include "tilt/verifier.hpp"

using namespace tilt;
using tilt::testing::pairs_circuit;
using tilt::testing::random_circuit;

namespace {

Schedule compile_boss(const Circuit& c, int zone) {
  return schedule_blocks(tilt_blocking(c, zone), c, zone);
}

void require_valid(const Circuit& c, const Schedule& s, int zone) {
  VerificationReport r = verify(c, s, zone);
  if (!r.valid) {
    for (const Violation& v : r.violations) {
      MESSAGE("violation at ", v.event_seq, " [", v.rule, "] ", v.detail);
    }
  }
  REQUIRE(r.valid);
  CHECK(r.metrics.shuttles == s.metrics.shuttles);
  CHECK(r.metrics.swaps == s.metrics.swaps);
  CHECK(r.metrics.shuttle_distance == s.metrics.shuttle_distance);
  CHECK(r.metrics.two_qubit_gates == s.metrics.two_qubit_gates);
}

}  // namespace

TEST_CASE("blocks already inside the window schedule without shuttles") {
  Circuit c = pairs_circuit(16, {{0, 1}, {2, 3}, {0, 3}});
  Schedule s = compile_boss(c, 8);
  CHECK(s.metrics.shuttles == 0);
  CHECK(s.metrics.swaps == 0);
  require_valid(c, s, 8);
}

TEST_CASE("a coverable block outside the window needs one relocation") {
  Circuit c = pairs_circuit(24, {{16, 18}, {18, 19}, {17, 19}});
  Schedule s = compile_boss(c, 8);
  CHECK(s.metrics.shuttles == 1);
  CHECK(s.metrics.swaps == 0);
  require_valid(c, s, 8);
}

TEST_CASE("gather_block honors the per-block shuttle budget") {
  TapeState ts(64, 16);
  Block b;
  b.id = 0;
  b.qubits = {0, 63};
  MoveResult r = gather_block(ts, b);
  long shuttles = std::count_if(
      r.events.begin(), r.events.end(),
      [](const ScheduleEvent& e) { return e.kind == EventKind::Shuttle; });
  CHECK(shuttles <= 2 * 64 / 16);
  // Both qubits inside the final window.
  int h = r.state.head();
  CHECK(r.state.position_of(0) >= h);
  CHECK(r.state.position_of(0) < h + 16);
  CHECK(r.state.position_of(63) >= h);
  CHECK(r.state.position_of(63) < h + 16);
}

TEST_CASE("gather_block leaves an already gathered block alone") {
  TapeState ts(64, 16);
  Block b;
  b.id = 0;
  b.qubits = {3, 4, 5};
  MoveResult r = gather_block(ts, b);
  CHECK(r.events.empty());
}

TEST_CASE("three scattered qubits converge around the median") {
  Circuit c = pairs_circuit(64, {{0, 31}, {31, 63}, {0, 63}});
  Schedule s = compile_boss(c, 16);
  require_valid(c, s, 16);
}

TEST_CASE("bv at zone 16 compiles to at most four shuttles") {
  Circuit c = generate_benchmark("bv", 65);
  Schedule s = compile_boss(c, 16);
  CHECK(s.metrics.shuttles <= 4);
  require_valid(c, s, 16);
}

TEST_CASE("qft64 at zone 32 lands in the expected shuttle band") {
  Circuit c = generate_benchmark("qft", 64);
  Schedule s = compile_boss(c, 32);
  CHECK(s.metrics.shuttles >= 4);
  CHECK(s.metrics.shuttles <= 16);
  require_valid(c, s, 32);
}

TEST_CASE("zone larger than the tape is an error") {
  Circuit c = pairs_circuit(4, {{0, 1}});
  CHECK_THROWS_AS(compile_boss(c, 8), std::invalid_argument);
  CHECK_THROWS_AS(schedule_baseline(c, 8), std::invalid_argument);
}

TEST_CASE("mismatched blocks are rejected") {
  Circuit c = pairs_circuit(8, {{0, 1}, {2, 3}});
  std::vector<Block> blocks = tilt_blocking(c, 4);
  blocks[0].gate_ids.pop_back();
  CHECK_THROWS_AS(schedule_blocks(blocks, c, 4), std::invalid_argument);
}

TEST_CASE("shuttle and swap bounds hold across generated benchmarks") {
  for (const std::string& name : benchmark_names()) {
    for (int n : {16, 32}) {
      for (int zone : {8, 16}) {
        if (zone > n) {
          continue;
        }
        Circuit c = generate_benchmark(name, n, 11);
        std::vector<Block> blocks = tilt_blocking(c, zone);
        Schedule s = schedule_blocks(blocks, c, zone);
        require_valid(c, s, zone);
        double bound = 2.0 * n * static_cast<double>(blocks.size()) / zone +
                       static_cast<double>(blocks.size());
        CHECK_MESSAGE(static_cast<double>(s.metrics.shuttles) <= bound,
                      name, " n=", n, " Z=", zone, " S=", s.metrics.shuttles,
                      " bound=", bound);
        CHECK_MESSAGE(
            s.metrics.swaps <= (zone / 2) * s.metrics.shuttles,
            name, " n=", n, " Z=", zone, " swaps=", s.metrics.swaps,
            " S=", s.metrics.shuttles);
      }
    }
  }
}

TEST_CASE("cooling is paired with every shuttle") {
  Circuit c = generate_benchmark("qft", 24);
  Schedule s = compile_boss(c, 8);
  long shuttles = 0;
  long cools = 0;
  for (std::size_t i = 0; i < s.events.size(); ++i) {
    if (s.events[i].kind == EventKind::Shuttle) {
      ++shuttles;
      REQUIRE(i + 1 < s.events.size());
      CHECK(s.events[i + 1].kind == EventKind::Cool);
    }
    cools += s.events[i].kind == EventKind::Cool ? 1 : 0;
  }
  CHECK(shuttles == cools);
}

TEST_CASE("identical inputs give identical schedules") {
  Circuit c = generate_benchmark("rcs-like", 24, 5);
  Schedule a = compile_boss(c, 8);
  Schedule b = compile_boss(c, 8);
  REQUIRE(a.events.size() == b.events.size());
  for (std::size_t i = 0; i < a.events.size(); ++i) {
    CHECK(a.events[i].kind == b.events[i].kind);
    CHECK(a.events[i].gate_id == b.events[i].gate_id);
    CHECK(a.events[i].pos0 == b.events[i].pos0);
    CHECK(a.events[i].pos1 == b.events[i].pos1);
    CHECK(a.events[i].delta == b.events[i].delta);
  }
  CHECK(a.final_positions == b.final_positions);
}

TEST_CASE("baseline executes in-window circuits without shuttles") {
  Circuit c = pairs_circuit(16, {{0, 5}, {3, 7}, {1, 2}});
  Schedule s = schedule_baseline(c, 8);
  CHECK(s.metrics.shuttles == 0);
  require_valid(c, s, 8);
}

TEST_CASE("baseline routes a full-span gate") {
  Circuit c = pairs_circuit(24, {{0, 23}});
  Schedule s = schedule_baseline(c, 8);
  CHECK(s.metrics.shuttles + s.metrics.swaps >= 1);
  require_valid(c, s, 8);
}

TEST_CASE("both algorithms verify on random circuits") {
  for (unsigned seed = 1; seed <= 20; ++seed) {
    Circuit c = random_circuit(12, 24, seed);
    Schedule boss = compile_boss(c, 4);
    require_valid(c, boss, 4);
    Schedule base = schedule_baseline(c, 4);
    require_valid(c, base, 4);
  }
}

TEST_CASE("single-qubit-only circuits schedule cleanly") {
  Circuit c;
  c.n_qubits = 24;
  for (int i = 0; i < 4; ++i) {
    Gate g;
    g.id = i;
    g.kind = GateKind::SingleQubit;
    g.name = "h";
    g.q0 = static_cast<QubitId>(6 * i);
    c.gates.push_back(g);
  }
  c.validate();
  Schedule s = compile_boss(c, 8);
  require_valid(c, s, 8);
  CHECK(s.metrics.two_qubit_gates == 0);
  Schedule base = schedule_baseline(c, 8);
  require_valid(c, base, 8);
}
