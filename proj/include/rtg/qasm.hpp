// Copyright 2026 The RTG Project Developers
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

#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rtg/circuit.hpp"

namespace rtg::qasm {

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error("qasm parse error at " + std::to_string(line) + ":" + std::to_string(column) +
              ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

namespace detail {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1;
  int column = 1;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  char advance() {
    const char c = text[pos++];
    if (c == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (!eof()) {
      const char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && pos + 1 < text.size() && text[pos + 1] == '/') {
        while (!eof() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, column); }

  std::string identifier() {
    skip_space_and_comments();
    if (eof() || (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_'))
      fail("expected identifier");
    std::string id;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      id += advance();
    return id;
  }

  int integer() {
    skip_space_and_comments();
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    int value = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
      value = value * 10 + (advance() - '0');
    return value;
  }

  void expect(char c) {
    skip_space_and_comments();
    if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  bool try_consume(char c) {
    skip_space_and_comments();
    if (!eof() && peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  /// Angle expression: products/quotients of numbers and `pi`, with an
  /// optional leading sign. Covers the idioms qasm emitters produce
  /// (pi/2, -pi/4, 3*pi/8, 0.25).
  double angle() {
    skip_space_and_comments();
    double sign = 1.0;
    if (try_consume('-')) sign = -1.0;
    double value = factor();
    while (true) {
      if (try_consume('*')) {
        value *= factor();
      } else if (try_consume('/')) {
        value /= factor();
      } else {
        break;
      }
    }
    return sign * value;
  }

 private:
  double factor() {
    skip_space_and_comments();
    if (eof()) fail("expected angle term");
    if (std::isalpha(static_cast<unsigned char>(peek()))) {
      const int at_line = line, at_col = column;
      const std::string id = identifier();
      if (id == "pi") return M_PI;
      throw ParseError("unknown symbol '" + id + "' in angle", at_line, at_col);
    }
    std::string num;
    while (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.' ||
                      peek() == 'e' || peek() == 'E' ||
                      ((peek() == '+' || peek() == '-') && !num.empty() &&
                       (num.back() == 'e' || num.back() == 'E'))))
      num += advance();
    if (num.empty()) fail("expected number");
    return std::stod(num);
  }
};

struct Register {
  int offset = 0;
  int size = 0;
};

}  // namespace detail

/// Parses the static OpenQASM 2 subset: qreg/creg declarations, the gates
/// h x z s t rz rx ry cx cz, measure, and barrier (ignored). Conditionals,
/// custom gate definitions and anything else raise a ParseError carrying
/// the offending construct and location.
inline Circuit parse_qasm2_subset(const std::string& text) {
  detail::Cursor cur{text};
  std::map<std::string, detail::Register> qregs;
  std::map<std::string, detail::Register> cregs;
  int num_qubits = 0;
  int num_clbits = 0;
  std::vector<Gate> gates;

  const auto qubit_operand = [&](detail::Cursor& c) {
    const int at_line = c.line, at_col = c.column;
    const std::string reg = c.identifier();
    const auto it = qregs.find(reg);
    if (it == qregs.end()) throw ParseError("unknown quantum register '" + reg + "'", at_line, at_col);
    c.expect('[');
    const int idx = c.integer();
    c.expect(']');
    if (idx >= it->second.size)
      throw ParseError("index " + std::to_string(idx) + " out of range for '" + reg + "'",
                       at_line, at_col);
    return it->second.offset + idx;
  };

  cur.skip_space_and_comments();
  while (!cur.eof()) {
    const int at_line = cur.line, at_col = cur.column;
    const std::string word = cur.identifier();

    if (word == "OPENQASM") {
      cur.angle();  // version number
      cur.expect(';');
    } else if (word == "include") {
      cur.skip_space_and_comments();
      cur.expect('"');
      while (!cur.eof() && cur.peek() != '"') cur.advance();
      cur.expect('"');
      cur.expect(';');
    } else if (word == "qreg" || word == "creg") {
      const std::string name = cur.identifier();
      cur.expect('[');
      const int size = cur.integer();
      cur.expect(']');
      cur.expect(';');
      if (word == "qreg") {
        qregs[name] = {num_qubits, size};
        num_qubits += size;
      } else {
        cregs[name] = {num_clbits, size};
        num_clbits += size;
      }
    } else if (word == "barrier") {
      while (!cur.eof() && cur.peek() != ';') cur.advance();
      cur.expect(';');
    } else if (word == "measure") {
      const int q = qubit_operand(cur);
      cur.skip_space_and_comments();
      cur.expect('-');
      cur.expect('>');
      const int bl = cur.line, bc = cur.column;
      const std::string creg = cur.identifier();
      const auto it = cregs.find(creg);
      if (it == cregs.end()) throw ParseError("unknown classical register '" + creg + "'", bl, bc);
      cur.expect('[');
      const int idx = cur.integer();
      cur.expect(']');
      cur.expect(';');
      if (idx >= it->second.size)
        throw ParseError("index " + std::to_string(idx) + " out of range for '" + creg + "'",
                         bl, bc);
      gates.push_back(Gate::measure(q, it->second.offset + idx));
    } else if (word == "h" || word == "x" || word == "z" || word == "s" || word == "t" ||
               word == "rz" || word == "rx" || word == "ry") {
      std::vector<double> params;
      if (word == "rz" || word == "rx" || word == "ry") {
        cur.expect('(');
        params.push_back(cur.angle());
        cur.expect(')');
      }
      const int q = qubit_operand(cur);
      cur.expect(';');
      gates.push_back(Gate::one_qubit(word, q, std::move(params)));
    } else if (word == "cx" || word == "cz") {
      const int a = qubit_operand(cur);
      cur.expect(',');
      const int b = qubit_operand(cur);
      cur.expect(';');
      gates.push_back(Gate::two_qubit(word, a, b));
    } else if (word == "if" || word == "gate" || word == "opaque" || word == "reset" ||
               word == "u" || word == "U") {
      throw ParseError("unsupported construct '" + word + "'", at_line, at_col);
    } else {
      throw ParseError("unsupported statement '" + word + "'", at_line, at_col);
    }
    cur.skip_space_and_comments();
  }

  Circuit circuit(num_qubits, num_clbits);
  for (Gate& g : gates) circuit.add(std::move(g));
  circuit.validate();
  return circuit;
}

/// Exports a static circuit (the parse subset plus measurement) as OpenQASM
/// 2. Gates outside the subset, virtual markers, resets and conditionals
/// are rejected.
inline std::string export_qasm2(const Circuit& circuit) {
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out += "qreg q[" + std::to_string(circuit.num_qubits()) + "];\n";
  if (circuit.num_clbits() > 0)
    out += "creg c[" + std::to_string(circuit.num_clbits()) + "];\n";
  const auto fmt_angle = [](double a) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", a);
    return std::string(buf);
  };
  for (const Gate& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::OneQubit: {
        static const std::set<std::string> plain{"h", "x", "z", "s", "t"};
        static const std::set<std::string> rot{"rz", "rx", "ry"};
        if (plain.count(g.name)) {
          out += g.name + " q[" + std::to_string(g.qubits[0]) + "];\n";
        } else if (rot.count(g.name)) {
          out += g.name + "(" + fmt_angle(g.params.at(0)) + ") q[" +
                 std::to_string(g.qubits[0]) + "];\n";
        } else {
          throw Error("gate '" + g.name + "' has no qasm2 form in the supported subset");
        }
        break;
      }
      case GateKind::TwoQubit:
        if (g.name != "cx" && g.name != "cz")
          throw Error("gate '" + g.name + "' has no qasm2 form in the supported subset");
        out += g.name + " q[" + std::to_string(g.qubits[0]) + "],q[" +
               std::to_string(g.qubits[1]) + "];\n";
        break;
      case GateKind::Measure:
        if (g.basis != Basis::Z) throw Error("qasm2 export supports Z-basis measurement only");
        out += "measure q[" + std::to_string(g.qubits[0]) + "] -> c[" +
               std::to_string(g.clbits[0]) + "];\n";
        break;
      default:
        throw Error("circuit is not static; qasm2 export supports unitary gates and measurement");
    }
  }
  return out;
}

}  // namespace rtg::qasm
