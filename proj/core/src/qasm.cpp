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

#include "tilt/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <vector>

namespace tilt {

namespace {

const std::set<std::string>& two_qubit_gate_names() {
  static const std::set<std::string> names = {
      "CX",  "cx",  "cy",   "cz",  "ch",  "cp",  "cu1", "crx", "cry",
      "crz", "csx", "ecr", "iswap", "rxx", "ryy", "rzz", "rzx", "swap"};
  return names;
}

enum class TokKind { Identifier, Number, String, Punct, End };

struct Token {
  TokKind kind = TokKind::End;
  std::string text;
  double value = 0.0;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_space_and_comments();
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_.kind = TokKind::End;
      tok_.text.clear();
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        id.push_back(take());
      }
      tok_.kind = TokKind::Identifier;
      tok_.text = std::move(id);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::string num;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E' ||
              ((text_[pos_] == '+' || text_[pos_] == '-') && !num.empty() &&
               (num.back() == 'e' || num.back() == 'E')))) {
        num.push_back(take());
      }
      tok_.kind = TokKind::Number;
      tok_.text = num;
      tok_.value = std::strtod(num.c_str(), nullptr);
      return;
    }
    if (c == '"') {
      take();
      std::string s;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        s.push_back(take());
      }
      if (pos_ < text_.size()) {
        take();
      }
      tok_.kind = TokKind::String;
      tok_.text = std::move(s);
      return;
    }
    tok_.kind = TokKind::Punct;
    tok_.text = std::string(1, take());
    // two-character arrow used by measure statements
    if (tok_.text == "-" && pos_ < text_.size() && text_[pos_] == '>') {
      tok_.text = "->";
      take();
    }
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        take();
      } else if (c == '/' && pos_ + 1 < text_.size() &&
                 text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') {
          take();
        }
      } else {
        break;
      }
    }
  }

  char take() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

class Parser {
 public:
  Parser(const std::string& text, std::string name)
      : lex_(text) {
    circuit_.name = std::move(name);
  }

  Circuit run() {
    while (lex_.peek().kind != TokKind::End) {
      statement();
    }
    circuit_.validate();
    return std::move(circuit_);
  }

 private:
  [[noreturn]] void fail(const Token& at, const std::string& message) {
    throw ParseError(at.line, at.col, message);
  }

  Token expect_punct(const std::string& p) {
    Token t = lex_.next();
    if (t.kind != TokKind::Punct || t.text != p) {
      fail(t, "expected '" + p + "'");
    }
    return t;
  }

  void skip_to_semicolon() {
    while (lex_.peek().kind != TokKind::End) {
      Token t = lex_.next();
      if (t.kind == TokKind::Punct && t.text == ";") {
        return;
      }
    }
  }

  void statement() {
    Token head = lex_.next();
    if (head.kind != TokKind::Identifier) {
      fail(head, "expected a statement");
    }
    if (head.text == "OPENQASM") {
      lex_.next();  // version number
      expect_punct(";");
      return;
    }
    if (head.text == "include") {
      lex_.next();  // file name string
      expect_punct(";");
      return;
    }
    if (head.text == "qreg") {
      parse_qreg(head);
      return;
    }
    if (head.text == "creg" || head.text == "barrier" ||
        head.text == "measure" || head.text == "reset") {
      skip_to_semicolon();
      return;
    }
    if (head.text == "if" || head.text == "gate" || head.text == "opaque") {
      fail(head, "unsupported statement '" + head.text + "'");
    }
    parse_gate(head);
  }

  void parse_qreg(const Token& head) {
    if (!qreg_name_.empty()) {
      fail(head, "multiple qreg declarations are not supported");
    }
    Token name = lex_.next();
    if (name.kind != TokKind::Identifier) {
      fail(name, "expected register name");
    }
    expect_punct("[");
    Token size = lex_.next();
    if (size.kind != TokKind::Number) {
      fail(size, "expected register size");
    }
    expect_punct("]");
    expect_punct(";");
    qreg_name_ = name.text;
    circuit_.n_qubits = static_cast<int>(size.value);
    if (circuit_.n_qubits <= 0) {
      fail(size, "register size must be positive");
    }
  }

  void parse_gate(const Token& head) {
    if (qreg_name_.empty()) {
      fail(head, "gate application before qreg declaration");
    }
    Gate g;
    g.name = head.text;
    if (lex_.peek().kind == TokKind::Punct && lex_.peek().text == "(") {
      lex_.next();
      if (!(lex_.peek().kind == TokKind::Punct && lex_.peek().text == ")")) {
        g.params.push_back(expression());
        while (lex_.peek().kind == TokKind::Punct && lex_.peek().text == ",") {
          lex_.next();
          g.params.push_back(expression());
        }
      }
      expect_punct(")");
    }
    std::vector<QubitId> operands;
    operands.push_back(operand());
    while (lex_.peek().kind == TokKind::Punct && lex_.peek().text == ",") {
      lex_.next();
      operands.push_back(operand());
      if (operands.size() > 2) {
        fail(head, "unsupported " + std::to_string(operands.size()) +
                       "-operand gate '" + g.name + "'");
      }
    }
    expect_punct(";");
    if (operands.size() == 1) {
      g.kind = GateKind::SingleQubit;
      g.q0 = operands[0];
    } else {
      if (!is_known_two_qubit_gate(g.name)) {
        fail(head, "unknown two-qubit gate '" + g.name + "'");
      }
      g.kind = g.name == "swap" ? GateKind::Swap : GateKind::TwoQubit;
      g.q0 = operands[0];
      g.q1 = operands[1];
      if (g.q0 == g.q1) {
        fail(head, "two-qubit gate operands must be distinct");
      }
    }
    g.id = static_cast<int>(circuit_.gates.size());
    circuit_.gates.push_back(std::move(g));
  }

  QubitId operand() {
    Token name = lex_.next();
    if (name.kind != TokKind::Identifier) {
      fail(name, "expected qubit operand");
    }
    if (name.text != qreg_name_) {
      fail(name, "unknown register '" + name.text + "'");
    }
    expect_punct("[");
    Token idx = lex_.next();
    if (idx.kind != TokKind::Number) {
      fail(idx, "expected qubit index");
    }
    expect_punct("]");
    auto q = static_cast<QubitId>(idx.value);
    if (q < 0 || q >= circuit_.n_qubits) {
      fail(idx, "qubit operand out of range");
    }
    return q;
  }

  // Parameter expressions: numbers, pi, + - * /, unary minus, parentheses.
  double expression() { return additive(); }

  double additive() {
    double v = multiplicative();
    while (lex_.peek().kind == TokKind::Punct &&
           (lex_.peek().text == "+" || lex_.peek().text == "-")) {
      std::string op = lex_.next().text;
      double rhs = multiplicative();
      v = op == "+" ? v + rhs : v - rhs;
    }
    return v;
  }

  double multiplicative() {
    double v = unary();
    while (lex_.peek().kind == TokKind::Punct &&
           (lex_.peek().text == "*" || lex_.peek().text == "/")) {
      std::string op = lex_.next().text;
      double rhs = unary();
      v = op == "*" ? v * rhs : v / rhs;
    }
    return v;
  }

  double unary() {
    if (lex_.peek().kind == TokKind::Punct && lex_.peek().text == "-") {
      lex_.next();
      return -unary();
    }
    Token t = lex_.next();
    if (t.kind == TokKind::Number) {
      return t.value;
    }
    if (t.kind == TokKind::Identifier && t.text == "pi") {
      return M_PI;
    }
    if (t.kind == TokKind::Punct && t.text == "(") {
      double v = expression();
      expect_punct(")");
      return v;
    }
    fail(t, "expected a parameter expression");
  }

  Lexer lex_;
  Circuit circuit_;
  std::string qreg_name_;
};

}  // namespace

ParseError::ParseError(int line, int col, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", col " +
                         std::to_string(col) + ": " + message),
      line_(line),
      col_(col) {}

bool is_known_two_qubit_gate(const std::string& gate_name) {
  return two_qubit_gate_names().count(gate_name) > 0;
}

Circuit parse_qasm(const std::string& text, const std::string& name) {
  return Parser(text, name).run();
}

std::string emit_qasm(const Circuit& c) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << c.n_qubits << "];\n";
  char buf[40];
  for (const Gate& g : c.gates) {
    out << g.name;
    if (!g.params.empty()) {
      out << '(';
      for (std::size_t i = 0; i < g.params.size(); ++i) {
        if (i > 0) {
          out << ',';
        }
        std::snprintf(buf, sizeof(buf), "%.17g", g.params[i]);
        out << buf;
      }
      out << ')';
    }
    out << " q[" << g.q0 << "]";
    if (g.is_two_qubit()) {
      out << ",q[" << g.q1 << "]";
    }
    out << ";\n";
  }
  return out.str();
}

}  // namespace tilt
