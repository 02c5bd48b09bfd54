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
#include <chrono>
#include <map>

#include "helpers.hpp"
#include "tilt/benchgen.hpp"
#include "tilt/blocking.hpp"
#include "tilt/depgraph.hpp"

using namespace tilt;
using tilt::testing::pairs_circuit;
using tilt::testing::random_circuit;

namespace {

void check_blocking_contract(const Circuit& c, int zone) {
  std::vector<Block> blocks = tilt_blocking(c, zone);
  // Partition: every gate exactly once.
  std::vector<int> seen(c.gates.size(), 0);
  std::vector<int> block_of(c.gates.size(), -1);
  std::vector<int> order_in_stream(c.gates.size(), -1);
  int stream = 0;
  for (const Block& b : blocks) {
    CHECK(static_cast<int>(b.qubits.size()) <= zone);
    std::vector<QubitId> touched;
    for (int gid : b.gate_ids) {
      REQUIRE(gid >= 0);
      REQUIRE(gid < static_cast<int>(c.gates.size()));
      ++seen[gid];
      block_of[gid] = b.id;
      order_in_stream[gid] = stream++;
      const Gate& g = c.gates[gid];
      touched.push_back(g.q0);
      if (g.is_two_qubit()) {
        touched.push_back(g.q1);
      }
    }
    // Qubit set is exactly the union of the operands.
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    CHECK(touched == b.qubits);
  }
  for (int s : seen) {
    CHECK(s == 1);
  }
  // Dependency: the concatenated stream respects every DAG edge.
  DependencyGraph dg = build_dependency_graph(c);
  for (const auto& [pred, succ] : dg.edges()) {
    CHECK(order_in_stream[pred] < order_in_stream[succ]);
  }
}

}  // namespace

TEST_CASE("worked example with a mid-stream flush") {
  Circuit c = pairs_circuit(6, {{0, 1}, {2, 3}, {1, 2}, {4, 5}, {3, 4}});
  std::vector<Block> blocks = tilt_blocking(c, 4);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].gate_ids == std::vector<int>{0, 1, 2});
  CHECK(blocks[0].qubits == std::vector<QubitId>{0, 1, 2, 3});
  CHECK(blocks[1].gate_ids == std::vector<int>{3, 4});
  CHECK(blocks[1].qubits == std::vector<QubitId>{3, 4, 5});
}

TEST_CASE("single gate forms a single block") {
  Circuit c = pairs_circuit(2, {{0, 1}});
  std::vector<Block> blocks = tilt_blocking(c, 2);
  REQUIRE(blocks.size() == 1);
  CHECK(blocks[0].gate_ids == std::vector<int>{0});
}

TEST_CASE("empty circuit gives no blocks") {
  Circuit c;
  c.n_qubits = 4;
  CHECK(tilt_blocking(c, 4).empty());
}

TEST_CASE("zone below 2 is rejected") {
  Circuit c = pairs_circuit(2, {{0, 1}});
  CHECK_THROWS_AS(tilt_blocking(c, 1), std::invalid_argument);
}

TEST_CASE("single-qubit gates join their qubit's group") {
  Circuit c;
  c.n_qubits = 3;
  Gate h;
  h.id = 0;
  h.kind = GateKind::SingleQubit;
  h.name = "h";
  h.q0 = 0;
  c.gates.push_back(h);
  Gate cx;
  cx.id = 1;
  cx.kind = GateKind::TwoQubit;
  cx.name = "cx";
  cx.q0 = 0;
  cx.q1 = 1;
  c.gates.push_back(cx);
  c.validate();
  std::vector<Block> blocks = tilt_blocking(c, 2);
  REQUIRE(blocks.size() == 1);
  CHECK(blocks[0].gate_ids == std::vector<int>{0, 1});
}

TEST_CASE("blocking contract holds on benchmarks and random circuits") {
  for (const std::string& name : benchmark_names()) {
    check_blocking_contract(generate_benchmark(name, 20, 3), 8);
  }
  for (unsigned seed = 1; seed <= 25; ++seed) {
    check_blocking_contract(random_circuit(10, 30, seed), 4);
  }
}

TEST_CASE("bv blocking packs the shared qubit with fresh partners") {
  Circuit c = generate_benchmark("bv", 65);
  std::vector<Block> blocks = tilt_blocking(c, 16);
  // 64 gates through the shared qubit, 15 fresh partners per block.
  std::size_t two_qubit_blocks = 0;
  for (const Block& b : blocks) {
    bool has_two_qubit = false;
    for (int gid : b.gate_ids) {
      has_two_qubit |= c.gates[gid].is_two_qubit();
    }
    two_qubit_blocks += has_two_qubit ? 1 : 0;
  }
  CHECK(two_qubit_blocks == 5);
}

TEST_CASE("block statistics") {
  Block full;
  full.qubits = {0, 1, 2, 3};
  Block three;
  three.qubits = {4, 5, 6};
  CHECK(block_stats({full}, 4).vacancy_rate == doctest::Approx(0.0));
  BlockStats stats = block_stats({full, three}, 4);
  CHECK(stats.count == 2);
  CHECK(stats.vacancy_rate == doctest::Approx(0.125));
  CHECK(stats.mean_qubits == doctest::Approx(3.5));
  BlockStats empty = block_stats({}, 4);
  CHECK(empty.count == 0);
  CHECK(empty.vacancy_rate == doctest::Approx(0.0));
}

TEST_CASE("blocking time scales linearly in gate count at fixed n") {
  auto time_blocking = [](int gates) {
    Circuit c = random_circuit(32, gates, 7, 0.0);
    double best = 1e300;
    for (int rep = 0; rep < 3; ++rep) {
      auto start = std::chrono::steady_clock::now();
      auto blocks = tilt_blocking(c, 8);
      auto stop = std::chrono::steady_clock::now();
      CHECK(!blocks.empty());
      best = std::min(
          best, std::chrono::duration<double>(stop - start).count());
    }
    return best;
  };
  double t1 = time_blocking(10000);
  double t2 = time_blocking(20000);
  CHECK(t2 <= 4.0 * t1 + 1e-3);
}
