// Copyright 2026 The uhlmann-sim developers
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

#include "uhlmann/qasm.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace uhlmann {

namespace {

std::string format_angle(double angle, bool full_precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), full_precision ? "%.17g" : "%.6g", angle);
  return buf;
}

std::string barrier_line(int qreg_size) {
  std::string line = "barrier ";
  for (int i = 0; i < qreg_size; ++i) {
    line += "q[" + std::to_string(i) + "]";
    line += (i + 1 < qreg_size) ? "," : ";";
  }
  return line;
}

// Cursor over the source text with line/column bookkeeping.
class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool eof() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& message) const {
    throw QasmParseError(message, line_, column_);
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  bool consume(char c) {
    skip_space();
    if (peek() != c) return false;
    advance();
    return true;
  }

  std::string identifier() {
    skip_space();
    if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_') {
      fail("expected identifier");
    }
    std::string id;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' ||
           peek() == '.') {
      id += peek();
      advance();
    }
    return id;
  }

  std::string quoted_string() {
    skip_space();
    if (peek() != '"') fail("expected string literal");
    advance();
    std::string value;
    while (peek() != '"') {
      if (peek() == '\0' || peek() == '\n') fail("unterminated string literal");
      value += peek();
      advance();
    }
    advance();
    return value;
  }

  double number() {
    skip_space();
    const char* begin = text_.data() + pos_;
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin) fail("expected number");
    const std::size_t consumed = static_cast<std::size_t>(end - begin);
    for (std::size_t i = 0; i < consumed; ++i) advance();
    return value;
  }

  int index_in_brackets() {
    expect('[');
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected register index");
    int value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      advance();
    }
    expect(']');
    return value;
  }

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  void advance() {
    if (pos_ >= text_.size()) return;
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

std::string emit_qasm(const Circuit& circuit, const QasmEmitOptions& options) {
  if (options.qreg_size < circuit.n_qubits()) {
    throw std::invalid_argument("emit_qasm: qreg smaller than the circuit register");
  }
  auto wire = [&options](int q) {
    if (options.wire_map.empty()) return q;
    return options.wire_map.at(static_cast<std::size_t>(q));
  };
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "\n";
  out << "qreg q[" << options.qreg_size << "];\n";
  out << "creg c[" << options.creg_size << "];\n";
  for (const Gate& gate : circuit.gates()) {
    switch (gate.kind) {
      case GateKind::Ry:
        out << "u3(" << format_angle(gate.angle, options.full_precision) << ",0,0) q["
            << wire(gate.target) << "];\n";
        break;
      case GateKind::Hadamard:
        out << "h q[" << wire(gate.target) << "];\n";
        break;
      case GateKind::Sdg:
        out << "sdg q[" << wire(gate.target) << "];\n";
        break;
      case GateKind::Cnot:
        out << "cx q[" << wire(gate.control) << "],q[" << wire(gate.target) << "];\n";
        break;
      case GateKind::Barrier:
        out << barrier_line(options.qreg_size) << "\n";
        break;
      case GateKind::Measure:
        out << "measure q[" << wire(gate.target) << "] -> c[" << gate.clbit << "];\n";
        break;
    }
  }
  return out.str();
}

Circuit parse_qasm(std::string_view text) {
  Lexer lex(text);

  // Header: OPENQASM 2.0; include "qelib1.inc";
  if (lex.identifier() != "OPENQASM") lex.fail("expected OPENQASM header");
  if (lex.number() != 2.0) lex.fail("only OPENQASM 2.0 is supported");
  lex.expect(';');
  if (lex.identifier() != "include") lex.fail("expected include directive");
  if (lex.quoted_string() != "qelib1.inc") {
    lex.fail("unsupported include (only qelib1.inc)");
  }
  lex.expect(';');

  int qreg_size = -1;
  int creg_size = -1;
  std::optional<Circuit> circuit;

  auto require_circuit = [&]() -> Circuit& {
    if (!circuit.has_value()) lex.fail("gate before qreg declaration");
    return *circuit;
  };
  auto qubit_operand = [&]() {
    const std::string reg = lex.identifier();
    if (reg != "q") lex.fail("unknown quantum register '" + reg + "'");
    const int index = lex.index_in_brackets();
    if (index >= qreg_size) lex.fail("qubit index out of range");
    return index;
  };

  while (!lex.eof()) {
    const std::string word = lex.identifier();
    if (word == "qreg") {
      if (lex.identifier() != "q") lex.fail("only a register named q is supported");
      qreg_size = lex.index_in_brackets();
      lex.expect(';');
      if (qreg_size < 3 || qreg_size > 8) lex.fail("unsupported qreg size");
      circuit.emplace(qreg_size);
    } else if (word == "creg") {
      if (lex.identifier() != "c") lex.fail("only a register named c is supported");
      creg_size = lex.index_in_brackets();
      lex.expect(';');
    } else if (word == "u3") {
      lex.expect('(');
      const double theta = lex.number();
      lex.expect(',');
      const double phi = lex.number();
      lex.expect(',');
      const double lambda = lex.number();
      lex.expect(')');
      if (phi != 0.0 || lambda != 0.0) {
        lex.fail("unsupported construct: u3 with non-zero phi or lambda");
      }
      const int q = qubit_operand();
      require_circuit().add_ry(q, theta);
      lex.expect(';');
    } else if (word == "cx") {
      const int control = qubit_operand();
      lex.expect(',');
      const int target = qubit_operand();
      require_circuit().add_cnot(control, target);
      lex.expect(';');
    } else if (word == "h" || word == "sdg") {
      const int q = qubit_operand();
      if (word == "h") {
        require_circuit().add_h(q);
      } else {
        require_circuit().add_sdg(q);
      }
      lex.expect(';');
    } else if (word == "barrier") {
      // Operand list is accepted and ignored; a barrier spans the register.
      qubit_operand();
      while (lex.consume(',')) qubit_operand();
      require_circuit().add_barrier();
      lex.expect(';');
    } else if (word == "measure") {
      const int q = qubit_operand();
      lex.expect('-');
      lex.expect('>');
      const std::string creg = lex.identifier();
      if (creg != "c") lex.fail("unknown classical register '" + creg + "'");
      const int clbit = lex.index_in_brackets();
      if (creg_size < 0) lex.fail("measure before creg declaration");
      if (clbit >= creg_size) lex.fail("classical bit index out of range");
      require_circuit().add_measure(q, clbit);
      lex.expect(';');
    } else {
      lex.fail("unsupported construct '" + word + "'");
    }
  }
  if (!circuit.has_value()) lex.fail("missing qreg declaration");
  return *circuit;
}

}  // namespace uhlmann
