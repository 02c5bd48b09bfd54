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

#include <algorithm>
#include <chrono>
#include <numeric>

#include "helpers.hpp"
#include "tilt/depgraph.hpp"

using namespace tilt;
using tilt::testing::pairs_circuit;
using tilt::testing::random_circuit;

TEST_CASE("direct-predecessor edges and initial frontier") {
  Circuit c = pairs_circuit(4, {{0, 1}, {2, 3}, {1, 2}});
  DependencyGraph dg = build_dependency_graph(c);
  auto edges = dg.edges();
  REQUIRE(edges.size() == 2);
  CHECK(edges[0] == std::pair<int, int>{0, 2});
  CHECK(edges[1] == std::pair<int, int>{1, 2});
  REQUIRE(dg.frontier.size() == 2);
  CHECK(dg.frontier[0] == 0);
  CHECK(dg.frontier[1] == 1);
}

TEST_CASE("empty circuit gives an empty graph") {
  Circuit c;
  c.n_qubits = 3;
  DependencyGraph dg = build_dependency_graph(c);
  CHECK(dg.num_gates == 0);
  CHECK(dg.edges().empty());
  CHECK(dg.frontier_empty());
}

TEST_CASE("repeated pair produces a single edge") {
  Circuit c = pairs_circuit(2, {{0, 1}, {0, 1}});
  DependencyGraph dg = build_dependency_graph(c);
  auto edges = dg.edges();
  REQUIRE(edges.size() == 1);
  CHECK(edges[0] == std::pair<int, int>{0, 1});
  CHECK(dg.pending_pred_count[1] == 1);
}

TEST_CASE("per-qubit program order is reproduced by any topological order") {
  for (unsigned seed = 1; seed <= 30; ++seed) {
    Circuit c = random_circuit(6, 14, seed);
    DependencyGraph dg = build_dependency_graph(c);
    // Kahn's algorithm; consume the frontier as the topological order.
    std::vector<int> order;
    while (!dg.frontier_empty()) {
      int g = dg.pop_frontier();
      order.push_back(g);
      dg.complete(g);
    }
    REQUIRE(order.size() == c.gates.size());
    std::vector<int> rank(c.gates.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      rank[order[i]] = static_cast<int>(i);
    }
    for (QubitId q = 0; q < c.n_qubits; ++q) {
      int prev_rank = -1;
      for (const Gate& g : c.gates) {
        if (!g.touches(q)) {
          continue;
        }
        CHECK(rank[g.id] > prev_rank);
        prev_rank = rank[g.id];
      }
    }
  }
}

TEST_CASE("construction time scales linearly with gate count") {
  auto time_build = [](int gates) {
    Circuit c = random_circuit(32, gates, 99, 0.0);
    double best = 1e300;
    for (int rep = 0; rep < 5; ++rep) {
      auto start = std::chrono::steady_clock::now();
      DependencyGraph dg = build_dependency_graph(c);
      auto stop = std::chrono::steady_clock::now();
      CHECK(dg.num_gates == gates);
      best = std::min(
          best, std::chrono::duration<double>(stop - start).count());
    }
    return best;
  };
  double t1 = time_build(20000);
  double t2 = time_build(40000);
  // Doubling the gate count may at most double the time, within 2x slack.
  CHECK(t2 <= 4.0 * t1 + 1e-3);
}
