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

#include "tilt/benchgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace tilt {

namespace {

class Builder {
 public:
  explicit Builder(int n, std::string name) {
    circuit_.n_qubits = n;
    circuit_.name = std::move(name);
  }

  void single(const std::string& name, QubitId q,
              std::vector<double> params = {}) {
    Gate g;
    g.id = static_cast<int>(circuit_.gates.size());
    g.kind = GateKind::SingleQubit;
    g.name = name;
    g.q0 = q;
    g.params = std::move(params);
    circuit_.gates.push_back(std::move(g));
  }

  void two(const std::string& name, QubitId a, QubitId b,
           std::vector<double> params = {}) {
    Gate g;
    g.id = static_cast<int>(circuit_.gates.size());
    g.kind = name == "swap" ? GateKind::Swap : GateKind::TwoQubit;
    g.name = name;
    g.q0 = a;
    g.q1 = b;
    g.params = std::move(params);
    circuit_.gates.push_back(std::move(g));
  }

  Circuit finish() {
    circuit_.validate();
    return std::move(circuit_);
  }

 private:
  Circuit circuit_;
};

Circuit gen_qft(int n) {
  Builder b(n, "qft");
  for (QubitId i = 0; i < n; ++i) {
    b.single("h", i);
    for (QubitId j = i + 1; j < n; ++j) {
      b.two("cp", i, j, {M_PI / std::ldexp(1.0, j - i)});
    }
  }
  return b.finish();
}

// Shared target on qubit 0 so the all-ones oracle reads cx q[k], q[0].
Circuit gen_bv(int n) {
  Builder b(n, "bv");
  b.single("x", 0);
  for (QubitId q = 0; q < n; ++q) {
    b.single("h", q);
  }
  for (QubitId q = 1; q < n; ++q) {
    b.two("cx", q, 0);
  }
  for (QubitId q = 1; q < n; ++q) {
    b.single("h", q);
  }
  return b.finish();
}

Circuit gen_qaoa_ring(int n, unsigned seed) {
  Builder b(n, "qaoa-ring");
  std::vector<QubitId> label(n);
  std::iota(label.begin(), label.end(), 0);
  if (seed != 0) {
    std::mt19937 rng(seed);
    std::shuffle(label.begin(), label.end(), rng);
  }
  for (QubitId q = 0; q < n; ++q) {
    b.single("h", q);
  }
  for (int i = 0; i < n; ++i) {
    b.two("rzz", label[i], label[(i + 1) % n], {0.7});
  }
  for (QubitId q = 0; q < n; ++q) {
    b.single("rx", q, {0.3});
  }
  return b.finish();
}

Circuit gen_alt(int n) {
  constexpr int kRounds = 20;
  Builder b(n, "alt");
  for (int r = 0; r < kRounds; ++r) {
    for (int q = 0; q + 1 < n; q += 2) {
      b.two("cz", q, q + 1);
    }
    for (int q = 1; q + 1 < n; q += 2) {
      b.two("cz", q, q + 1);
    }
  }
  return b.finish();
}

Circuit gen_rcs_like(int n, unsigned seed) {
  constexpr int kLayers = 18;
  static const char* kTwoQubit[] = {"cx", "cz", "iswap"};
  Builder b(n, "rcs-like");
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick_gate(0, 2);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  for (int layer = 0; layer < kLayers; ++layer) {
    for (QubitId q = 0; q < n; ++q) {
      b.single("u3", q, {angle(rng), angle(rng), angle(rng)});
    }
    for (int q = layer % 2; q + 1 < n; q += 2) {
      b.two(kTwoQubit[pick_gate(rng)], q, q + 1);
    }
  }
  return b.finish();
}

// 6-CX Toffoli expansion; single-qubit phase gates ride along.
void expanded_toffoli(Builder& b, QubitId c0, QubitId c1, QubitId target) {
  b.single("h", target);
  b.two("cx", c1, target);
  b.single("tdg", target);
  b.two("cx", c0, target);
  b.single("t", target);
  b.two("cx", c1, target);
  b.single("tdg", target);
  b.two("cx", c0, target);
  b.single("t", c1);
  b.single("t", target);
  b.single("h", target);
  b.two("cx", c0, c1);
  b.single("t", c0);
  b.single("tdg", c1);
  b.two("cx", c0, c1);
}

// Ripple-carry ladder over qubit triples (carry, b_i, a_i); the classic
// MAJ/UMA pattern with expanded Toffolis. Short-distance gates only.
Circuit gen_adder_ripple(int n) {
  Builder b(n, "adder-ripple");
  if (n < 4) {
    for (QubitId q = 0; q + 1 < n; ++q) {
      b.two("cx", q, q + 1);
    }
    return b.finish();
  }
  int bits = (n - 2) / 2;
  auto a_bit = [](int i) { return static_cast<QubitId>(2 * i + 1); };
  auto b_bit = [](int i) { return static_cast<QubitId>(2 * i + 2); };
  QubitId carry_out = static_cast<QubitId>(2 * bits + 1);
  for (int i = 0; i < bits; ++i) {
    QubitId prev = i == 0 ? 0 : a_bit(i - 1);
    b.two("cx", a_bit(i), b_bit(i));
    b.two("cx", a_bit(i), prev);
    expanded_toffoli(b, prev, b_bit(i), a_bit(i));
  }
  b.two("cx", a_bit(bits - 1), carry_out);
  for (int i = bits - 1; i >= 0; --i) {
    QubitId prev = i == 0 ? 0 : a_bit(i - 1);
    expanded_toffoli(b, prev, b_bit(i), a_bit(i));
    b.two("cx", a_bit(i), prev);
    b.two("cx", prev, b_bit(i));
  }
  return b.finish();
}

}  // namespace

const std::vector<std::string>& benchmark_names() {
  static const std::vector<std::string> names = {
      "qft", "bv", "qaoa-ring", "alt", "rcs-like", "adder-ripple"};
  return names;
}

Circuit generate_benchmark(const std::string& name, int n_qubits,
                           unsigned seed) {
  if (n_qubits < 2) {
    throw std::invalid_argument("benchmark circuits need at least 2 qubits");
  }
  if (name == "qft") {
    return gen_qft(n_qubits);
  }
  if (name == "bv") {
    return gen_bv(n_qubits);
  }
  if (name == "qaoa-ring") {
    return gen_qaoa_ring(n_qubits, seed);
  }
  if (name == "alt") {
    return gen_alt(n_qubits);
  }
  if (name == "rcs-like") {
    return gen_rcs_like(n_qubits, seed);
  }
  if (name == "adder-ripple") {
    return gen_adder_ripple(n_qubits);
  }
  throw std::invalid_argument("unknown benchmark '" + name + "'");
}

Circuit decompose_cp_to_cx(const Circuit& c) {
  Circuit out;
  out.n_qubits = c.n_qubits;
  out.name = c.name;
  for (const Gate& g : c.gates) {
    if (g.is_two_qubit() && (g.name == "cp" || g.name == "cu1")) {
      double theta = g.params.empty() ? 0.0 : g.params[0];
      Gate part;
      part.kind = GateKind::SingleQubit;
      part.name = "rz";
      part.q0 = g.q0;
      part.params = {theta / 2};
      part.id = static_cast<int>(out.gates.size());
      out.gates.push_back(part);

      Gate cx;
      cx.kind = GateKind::TwoQubit;
      cx.name = "cx";
      cx.q0 = g.q0;
      cx.q1 = g.q1;
      cx.id = static_cast<int>(out.gates.size());
      out.gates.push_back(cx);

      part.q0 = g.q1;
      part.params = {-theta / 2};
      part.id = static_cast<int>(out.gates.size());
      out.gates.push_back(part);

      cx.id = static_cast<int>(out.gates.size());
      out.gates.push_back(cx);
    } else {
      Gate copy = g;
      copy.id = static_cast<int>(out.gates.size());
      out.gates.push_back(std::move(copy));
    }
  }
  out.validate();
  return out;
}

}  // namespace tilt
