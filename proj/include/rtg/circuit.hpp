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

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rtg {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when a circuit or gate violates a structural invariant. Carries the
/// index of the offending gate where one exists (-1 otherwise).
class ValidationError : public Error {
 public:
  ValidationError(const std::string& msg, int gate_index = -1)
      : Error(gate_index >= 0 ? msg + " (gate " + std::to_string(gate_index) + ")" : msg),
        gate_index_(gate_index) {}
  int gate_index() const { return gate_index_; }

 private:
  int gate_index_;
};

enum class GateKind : std::uint8_t {
  OneQubit,
  TwoQubit,
  VirtualTwoQubit,  // placeholder for a gate executed over a virtual edge
  Measure,
  Reset,
  ConditionalPauli,
};

enum class Basis : std::uint8_t { Z, X };

using Complex = std::complex<double>;
using Unitary2 = std::array<Complex, 4>;  // row-major 2x2

/// Parity predicate over classical bits: fires when XOR(bits) == parity.
struct Condition {
  std::vector<int> bits;
  int parity = 1;

  bool operator==(const Condition&) const = default;
};

struct Gate {
  GateKind kind = GateKind::OneQubit;
  std::string name;            // h x z s t rz rx ry u3 | cx cz rzz cu swap | x z (conditional)
  std::vector<int> qubits;
  std::vector<int> clbits;     // Measure: one destination bit
  std::vector<double> params;  // rz/rx/ry/rzz: angle; u3: theta,phi,lambda; cu: 2x2 as 8 doubles
  Basis basis = Basis::Z;      // Measure only
  std::optional<Condition> condition;  // ConditionalPauli only
  int edge = -1;               // VirtualTwoQubit: index into CouplingMap::virtual_edges
  int group = -1;              // teleport instance tag, assigned during expansion

  bool operator==(const Gate&) const = default;

  bool is_two_qubit_class() const {
    return kind == GateKind::TwoQubit || kind == GateKind::VirtualTwoQubit;
  }

  // -- factories ------------------------------------------------------------

  static Gate one_qubit(std::string name, int q, std::vector<double> params = {}) {
    Gate g;
    g.kind = GateKind::OneQubit;
    g.name = std::move(name);
    g.qubits = {q};
    g.params = std::move(params);
    return g;
  }
  static Gate h(int q) { return one_qubit("h", q); }
  static Gate x(int q) { return one_qubit("x", q); }
  static Gate z(int q) { return one_qubit("z", q); }
  static Gate s(int q) { return one_qubit("s", q); }
  static Gate t(int q) { return one_qubit("t", q); }
  static Gate rz(double theta, int q) { return one_qubit("rz", q, {theta}); }
  static Gate rx(double theta, int q) { return one_qubit("rx", q, {theta}); }
  static Gate ry(double theta, int q) { return one_qubit("ry", q, {theta}); }
  static Gate u3(double theta, double phi, double lambda, int q) {
    return one_qubit("u3", q, {theta, phi, lambda});
  }

  static Gate two_qubit(std::string name, int a, int b, std::vector<double> params = {}) {
    Gate g;
    g.kind = GateKind::TwoQubit;
    g.name = std::move(name);
    g.qubits = {a, b};
    g.params = std::move(params);
    return g;
  }
  static Gate cx(int control, int target) { return two_qubit("cx", control, target); }
  static Gate cz(int a, int b) { return two_qubit("cz", a, b); }
  static Gate swap(int a, int b) { return two_qubit("swap", a, b); }
  static Gate rzz(double theta, int a, int b) { return two_qubit("rzz", a, b, {theta}); }
  static Gate cu(const Unitary2& u, int control, int target) {
    return two_qubit("cu", control, target,
                     {u[0].real(), u[0].imag(), u[1].real(), u[1].imag(),
                      u[2].real(), u[2].imag(), u[3].real(), u[3].imag()});
  }

  /// Marker for a two-qubit gate routed over virtual edge `edge`.
  static Gate virtual_two_qubit(const Gate& base, int edge) {
    Gate g = base;
    g.kind = GateKind::VirtualTwoQubit;
    g.edge = edge;
    return g;
  }

  static Gate measure(int q, int bit, Basis basis = Basis::Z) {
    Gate g;
    g.kind = GateKind::Measure;
    g.name = "measure";
    g.qubits = {q};
    g.clbits = {bit};
    g.basis = basis;
    return g;
  }

  static Gate reset(int q) {
    Gate g;
    g.kind = GateKind::Reset;
    g.name = "reset";
    g.qubits = {q};
    return g;
  }

  /// Pauli applied iff XOR of `bits` equals `parity`.
  static Gate conditional_pauli(char pauli, int q, std::vector<int> bits, int parity = 1) {
    Gate g;
    g.kind = GateKind::ConditionalPauli;
    g.name = std::string(1, pauli);
    g.qubits = {q};
    g.condition = Condition{std::move(bits), parity};
    return g;
  }

  Unitary2 cu_matrix() const {
    if (name != "cu" || params.size() != 8) throw Error("gate is not a cu gate");
    return {Complex(params[0], params[1]), Complex(params[2], params[3]),
            Complex(params[4], params[5]), Complex(params[6], params[7])};
  }
};

/// Ordered gate list over qubit and classical-bit wires. List order defines
/// the dependency order on every wire.
class Circuit {
 public:
  Circuit() = default;
  Circuit(int num_qubits, int num_clbits = 0)
      : num_qubits_(num_qubits), num_clbits_(num_clbits) {
    if (num_qubits < 0 || num_clbits < 0) throw ValidationError("negative register size");
  }

  int num_qubits() const { return num_qubits_; }
  int num_clbits() const { return num_clbits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const Gate& gate(std::size_t i) const { return gates_.at(i); }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Physical data qubits this circuit's algorithm lives on. Empty when the
  /// circuit has no routed interpretation (plain logical circuits).
  const std::vector<int>& data_qubits() const { return data_qubits_; }
  void set_data_qubits(std::vector<int> dq) { data_qubits_ = std::move(dq); }

  void add(Gate g) {
    validate_gate(g, static_cast<int>(gates_.size()));
    gates_.push_back(std::move(g));
  }

  /// Full structural validation, including classical read-before-write order.
  void validate() const {
    std::vector<bool> written(static_cast<std::size_t>(num_clbits_), false);
    for (std::size_t i = 0; i < gates_.size(); ++i) {
      const Gate& g = gates_[i];
      validate_gate(g, static_cast<int>(i));
      if (g.kind == GateKind::Measure) written[static_cast<std::size_t>(g.clbits[0])] = true;
      if (g.kind == GateKind::ConditionalPauli) {
        for (int b : g.condition->bits) {
          if (!written[static_cast<std::size_t>(b)])
            throw ValidationError("classical bit " + std::to_string(b) + " read before write",
                                  static_cast<int>(i));
        }
      }
    }
  }

  bool operator==(const Circuit&) const = default;

 private:
  void validate_gate(const Gate& g, int index) const {
    const std::size_t expected_arity =
        (g.kind == GateKind::TwoQubit || g.kind == GateKind::VirtualTwoQubit) ? 2 : 1;
    if (g.qubits.size() != expected_arity)
      throw ValidationError("wrong qubit arity for gate '" + g.name + "'", index);
    for (int q : g.qubits) {
      if (q < 0 || q >= num_qubits_)
        throw ValidationError("qubit index " + std::to_string(q) + " out of range", index);
    }
    if (expected_arity == 2 && g.qubits[0] == g.qubits[1])
      throw ValidationError("duplicate qubit operands", index);
    if (g.kind == GateKind::Measure) {
      if (g.clbits.size() != 1)
        throw ValidationError("measure must write exactly one classical bit", index);
      check_clbit(g.clbits[0], index);
    }
    if (g.kind == GateKind::ConditionalPauli) {
      if (!g.condition || g.condition->bits.empty())
        throw ValidationError("conditional pauli needs a nonempty bit set", index);
      if (g.name != "x" && g.name != "z")
        throw ValidationError("conditional pauli must be x or z", index);
      for (int b : g.condition->bits) check_clbit(b, index);
    }
    if (g.kind == GateKind::VirtualTwoQubit && g.edge < 0)
      throw ValidationError("virtual gate without edge reference", index);
  }

  void check_clbit(int b, int index) const {
    if (b < 0 || b >= num_clbits_)
      throw ValidationError("classical bit " + std::to_string(b) + " out of range", index);
  }

  int num_qubits_ = 0;
  int num_clbits_ = 0;
  std::vector<int> data_qubits_;
  std::vector<Gate> gates_;
};

/// Rewrites every SWAP into its standard 3-CNOT decomposition. All other
/// gates pass through unchanged.
inline Circuit lower_swaps(const Circuit& circuit) {
  Circuit out(circuit.num_qubits(), circuit.num_clbits());
  out.set_data_qubits(circuit.data_qubits());
  for (const Gate& g : circuit.gates()) {
    if (g.kind == GateKind::TwoQubit && g.name == "swap") {
      out.add(Gate::cx(g.qubits[0], g.qubits[1]));
      out.add(Gate::cx(g.qubits[1], g.qubits[0]));
      out.add(Gate::cx(g.qubits[0], g.qubits[1]));
    } else {
      out.add(g);
    }
  }
  return out;
}

}  // namespace rtg
