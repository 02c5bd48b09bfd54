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

#include "tilt/benchgen.hpp"

using namespace tilt;

TEST_CASE("qft sizes") {
  CHECK(generate_benchmark("qft", 64).two_qubit_gate_count() == 2016);
  CHECK(generate_benchmark("qft", 2).two_qubit_gate_count() == 1);
  CHECK(generate_benchmark("qft", 10).two_qubit_gate_count() == 45);
}

TEST_CASE("bv has n-1 two-qubit gates") {
  CHECK(generate_benchmark("bv", 65).two_qubit_gate_count() == 64);
  CHECK(generate_benchmark("bv", 2).two_qubit_gate_count() == 1);
}

TEST_CASE("one qaoa ring layer has n gates") {
  CHECK(generate_benchmark("qaoa-ring", 64).two_qubit_gate_count() == 64);
  CHECK(generate_benchmark("qaoa-ring", 7, 3).two_qubit_gate_count() == 7);
}

TEST_CASE("alt matches its alternating-layer count") {
  CHECK(generate_benchmark("alt", 64).two_qubit_gate_count() == 20 * 63);
}

TEST_CASE("generators are deterministic per seed") {
  for (const std::string& name : benchmark_names()) {
    Circuit a = generate_benchmark(name, 16, 5);
    Circuit b = generate_benchmark(name, 16, 5);
    CHECK(same_structure(a, b));
  }
  Circuit a = generate_benchmark("rcs-like", 16, 5);
  Circuit b = generate_benchmark("rcs-like", 16, 6);
  CHECK_FALSE(same_structure(a, b));
}

TEST_CASE("qaoa ring seed relabels but keeps the ring size") {
  Circuit plain = generate_benchmark("qaoa-ring", 12, 0);
  Circuit shuffled = generate_benchmark("qaoa-ring", 12, 9);
  CHECK(plain.two_qubit_gate_count() == shuffled.two_qubit_gate_count());
  CHECK_FALSE(same_structure(plain, shuffled));
}

TEST_CASE("unknown names and tiny sizes are rejected") {
  CHECK_THROWS_AS(generate_benchmark("nope", 8), std::invalid_argument);
  CHECK_THROWS_AS(generate_benchmark("qft", 1), std::invalid_argument);
}

TEST_CASE("cp decomposition doubles two-qubit counts on the same pairs") {
  Circuit qft = generate_benchmark("qft", 16);
  Circuit decomposed = decompose_cp_to_cx(qft);
  CHECK(decomposed.two_qubit_gate_count() == 2 * qft.two_qubit_gate_count());
  CHECK(generate_benchmark("qft", 64).two_qubit_gate_count() * 2 == 4032);
}
