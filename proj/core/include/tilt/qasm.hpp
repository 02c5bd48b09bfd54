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

#include <stdexcept>
#include <string>

#include "tilt/circuit.hpp"

namespace tilt {

/// Reported with 1-based line and column of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& message);
  [[nodiscard]] int line() const { return line_; }
  [[nodiscard]] int col() const { return col_; }

 private:
  int line_;
  int col_;
};

/// Reads the OpenQASM 2 subset this compiler understands: a header, exactly
/// one qreg, and gate applications. `barrier` statements, creg declarations
/// and measurements are skipped. Unknown one-operand gate names are kept
/// verbatim; unknown multi-operand gates are rejected, as is anything with
/// more than two operands. Classical control (`if (...)`) is rejected.
Circuit parse_qasm(const std::string& text, const std::string& name = "");

/// Emits the same subset. parse_qasm(emit_qasm(c)) reproduces c up to the
/// circuit name.
std::string emit_qasm(const Circuit& c);

/// Two-operand gate names the parser accepts.
[[nodiscard]] bool is_known_two_qubit_gate(const std::string& gate_name);

}  // namespace tilt
