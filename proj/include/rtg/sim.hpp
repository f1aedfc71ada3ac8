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
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rtg/circuit.hpp"
#include "rtg/topology.hpp"

namespace rtg::sim {

/// Dense statevector over n qubits. Amplitude index x assigns qubit q the
/// bit (x >> q) & 1.
struct StateVector {
  int n = 0;
  std::vector<Complex> amp;

  static StateVector zero(int n) {
    StateVector s;
    s.n = n;
    s.amp.assign(std::size_t{1} << n, Complex(0, 0));
    s.amp[0] = Complex(1, 0);
    return s;
  }

  double norm_sq() const {
    double total = 0;
    for (const Complex& a : amp) total += std::norm(a);
    return total;
  }
};

inline Complex inner(const StateVector& a, const StateVector& b) {
  Complex dot(0, 0);
  for (std::size_t i = 0; i < a.amp.size(); ++i) dot += std::conj(a.amp[i]) * b.amp[i];
  return dot;
}

/// Global-phase-insensitive overlap |<a|b>|^2.
inline double fidelity(const StateVector& a, const StateVector& b) {
  return std::norm(inner(a, b));
}

using Matrix2 = std::array<Complex, 4>;
using Matrix4 = std::array<Complex, 16>;

inline Matrix2 one_qubit_matrix(const Gate& g) {
  const Complex I(0, 1);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  if (g.name == "h") return {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
  if (g.name == "x") return {0, 1, 1, 0};
  if (g.name == "z") return {1, 0, 0, -1};
  if (g.name == "s") return {1, 0, 0, I};
  if (g.name == "t") return {1, 0, 0, std::exp(I * (M_PI / 4))};
  if (g.name == "rz") {
    const double th = g.params.at(0);
    return {std::exp(-I * (th / 2)), 0, 0, std::exp(I * (th / 2))};
  }
  if (g.name == "rx") {
    const double th = g.params.at(0) / 2;
    return {std::cos(th), -I * std::sin(th), -I * std::sin(th), std::cos(th)};
  }
  if (g.name == "ry") {
    const double th = g.params.at(0) / 2;
    return {std::cos(th), -std::sin(th), std::sin(th), std::cos(th)};
  }
  if (g.name == "u3") {
    const double th = g.params.at(0) / 2;
    const double phi = g.params.at(1);
    const double lam = g.params.at(2);
    return {std::cos(th), -std::exp(I * lam) * std::sin(th),
            std::exp(I * phi) * std::sin(th), std::exp(I * (phi + lam)) * std::cos(th)};
  }
  throw Error("unknown one-qubit gate '" + g.name + "'");
}

/// 4x4 matrix in the basis |q_first q_second> with the gate's first operand
/// as the most significant bit.
inline Matrix4 two_qubit_matrix(const Gate& g) {
  const Complex I(0, 1);
  if (g.name == "cx")
    return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0};
  if (g.name == "cz")
    return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1};
  if (g.name == "swap")
    return {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1};
  if (g.name == "rzz") {
    const double th = g.params.at(0) / 2;
    const Complex m = std::exp(-I * th);
    const Complex p = std::exp(I * th);
    return {m, 0, 0, 0, 0, p, 0, 0, 0, 0, p, 0, 0, 0, 0, m};
  }
  if (g.name == "cu") {
    const Unitary2 u = g.cu_matrix();
    return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, u[0], u[1], 0, 0, u[2], u[3]};
  }
  throw Error("unknown two-qubit gate '" + g.name + "'");
}

inline void apply_one_qubit(StateVector& s, const Matrix2& m, int q) {
  const std::size_t stride = std::size_t{1} << q;
  for (std::size_t base = 0; base < s.amp.size(); base += 2 * stride) {
    for (std::size_t off = 0; off < stride; ++off) {
      const std::size_t i0 = base + off;
      const std::size_t i1 = i0 + stride;
      const Complex a0 = s.amp[i0];
      const Complex a1 = s.amp[i1];
      s.amp[i0] = m[0] * a0 + m[1] * a1;
      s.amp[i1] = m[2] * a0 + m[3] * a1;
    }
  }
}

inline void apply_two_qubit(StateVector& s, const Matrix4& m, int q_first, int q_second) {
  const std::size_t hi = std::size_t{1} << q_first;
  const std::size_t lo = std::size_t{1} << q_second;
  for (std::size_t x = 0; x < s.amp.size(); ++x) {
    if ((x & hi) || (x & lo)) continue;  // visit each 4-amplitude block once
    const std::size_t i00 = x;
    const std::size_t i01 = x | lo;
    const std::size_t i10 = x | hi;
    const std::size_t i11 = x | hi | lo;
    const Complex a00 = s.amp[i00], a01 = s.amp[i01], a10 = s.amp[i10], a11 = s.amp[i11];
    s.amp[i00] = m[0] * a00 + m[1] * a01 + m[2] * a10 + m[3] * a11;
    s.amp[i01] = m[4] * a00 + m[5] * a01 + m[6] * a10 + m[7] * a11;
    s.amp[i10] = m[8] * a00 + m[9] * a01 + m[10] * a10 + m[11] * a11;
    s.amp[i11] = m[12] * a00 + m[13] * a01 + m[14] * a10 + m[15] * a11;
  }
}

/// Applies a unitary-class gate. Virtual markers act as their underlying
/// ideal gate.
inline void apply_gate(StateVector& s, const Gate& g) {
  switch (g.kind) {
    case GateKind::OneQubit:
      apply_one_qubit(s, one_qubit_matrix(g), g.qubits[0]);
      return;
    case GateKind::TwoQubit:
    case GateKind::VirtualTwoQubit:
      apply_two_qubit(s, two_qubit_matrix(g), g.qubits[0], g.qubits[1]);
      return;
    default:
      throw Error("apply_gate called with non-unitary gate '" + g.name + "'");
  }
}

inline double probability_of_one(const StateVector& s, int q) {
  const std::size_t mask = std::size_t{1} << q;
  double p1 = 0;
  for (std::size_t x = 0; x < s.amp.size(); ++x) {
    if (x & mask) p1 += std::norm(s.amp[x]);
  }
  return p1;
}

/// Projects qubit q onto |outcome> and renormalizes by the given probability.
inline void project(StateVector& s, int q, int outcome, double prob) {
  const std::size_t mask = std::size_t{1} << q;
  const double scale = prob > 0 ? 1.0 / std::sqrt(prob) : 0.0;
  for (std::size_t x = 0; x < s.amp.size(); ++x) {
    const bool is_one = (x & mask) != 0;
    if (is_one != (outcome == 1)) {
      s.amp[x] = 0;
    } else {
      s.amp[x] *= scale;
    }
  }
}

/// One measurement-outcome path through a circuit.
struct Branch {
  std::vector<int> outcomes;   // one bit per Measure gate, in encounter order
  double probability = 1.0;
  bool zero_probability = false;
  StateVector state;
};

inline constexpr int kBranchCap = 20;

/// Exhaustive depth-first enumeration of every measurement-outcome branch.
/// ConditionalPauli gates are applied per branch from the recorded bits;
/// Reset requires the qubit to be in a definite computational state (the
/// template convention: measure first, then reset).
inline std::vector<Branch> enumerate_branches(const Circuit& circuit, const StateVector& input) {
  circuit.validate();
  if (input.n != circuit.num_qubits()) throw Error("statevector size does not match circuit");
  int measure_count = 0;
  for (const Gate& g : circuit.gates()) {
    if (g.kind == GateKind::Measure) ++measure_count;
  }
  if (measure_count > kBranchCap)
    throw Error("circuit has " + std::to_string(measure_count) +
                " measurements, above the exhaustive-branch cap of " +
                std::to_string(kBranchCap));

  constexpr double kProbTol = 1e-12;
  constexpr double kNormTol = 1e-9;

  std::vector<Branch> branches;
  struct Frame {
    StateVector state;
    std::vector<int> outcomes;
    std::vector<int> bits;
    double probability;
    bool zero;
    std::size_t next_gate;
  };
  std::vector<Frame> stack;
  stack.push_back({input, {}, std::vector<int>(static_cast<std::size_t>(circuit.num_clbits()), 0),
                   1.0, false, 0});

  while (!stack.empty()) {
    Frame frame = std::move(stack.back());
    stack.pop_back();
    bool done = true;
    for (std::size_t i = frame.next_gate; i < circuit.size(); ++i) {
      const Gate& g = circuit.gate(i);
      switch (g.kind) {
        case GateKind::OneQubit:
        case GateKind::TwoQubit:
        case GateKind::VirtualTwoQubit:
          apply_gate(frame.state, g);
          break;
        case GateKind::ConditionalPauli: {
          int parity = 0;
          for (int b : g.condition->bits) parity ^= frame.bits[static_cast<std::size_t>(b)];
          if (parity == g.condition->parity) {
            apply_one_qubit(frame.state, one_qubit_matrix(Gate::one_qubit(g.name, g.qubits[0])),
                            g.qubits[0]);
          }
          break;
        }
        case GateKind::Reset: {
          const double p1 = probability_of_one(frame.state, g.qubits[0]);
          if (p1 > kNormTol && p1 < 1.0 - kNormTol && !frame.zero)
            throw Error("reset of qubit " + std::to_string(g.qubits[0]) +
                        " in superposition is not supported by exhaustive enumeration");
          if (p1 >= 0.5) {
            apply_one_qubit(frame.state, one_qubit_matrix(Gate::x(g.qubits[0])), g.qubits[0]);
          }
          project(frame.state, g.qubits[0], 0, frame.zero ? 1.0 : std::max(1.0 - p1, p1));
          break;
        }
        case GateKind::Measure: {
          StateVector& s = frame.state;
          const int q = g.qubits[0];
          const bool x_basis = g.basis == Basis::X;
          if (x_basis) apply_one_qubit(s, one_qubit_matrix(Gate::h(q)), q);
          if (!frame.zero && std::abs(s.norm_sq() - 1.0) > kNormTol)
            throw Error("statevector norm drifted beyond tolerance");
          const double p1 = probability_of_one(s, q);
          for (int outcome : {1, 0}) {
            Frame next = frame;
            const double p = outcome ? p1 : 1.0 - p1;
            next.outcomes.push_back(outcome);
            next.bits[static_cast<std::size_t>(g.clbits[0])] = outcome;
            if (p < kProbTol || frame.zero) {
              next.zero = true;
              next.probability = 0.0;
              next.state = StateVector::zero(s.n);  // arbitrary normalized stand-in
            } else {
              next.probability = frame.probability * p;
              project(next.state, q, outcome, p);
              if (x_basis) apply_one_qubit(next.state, one_qubit_matrix(Gate::h(q)), q);
            }
            next.next_gate = i + 1;
            stack.push_back(std::move(next));
          }
          done = false;
          break;
        }
      }
      if (!done) break;
    }
    if (done) {
      Branch b;
      b.outcomes = std::move(frame.outcomes);
      b.probability = frame.zero ? 0.0 : frame.probability;
      b.zero_probability = frame.zero;
      b.state = std::move(frame.state);
      branches.push_back(std::move(b));
    }
  }

  double total = 0;
  for (const Branch& b : branches) total += b.probability;
  if (std::abs(total - 1.0) > 1e-9)
    throw Error("branch probabilities sum to " + std::to_string(total));
  return branches;
}

/// Haar-ish random pure state from a seeded generator.
inline StateVector random_state(int n, std::mt19937_64& rng) {
  StateVector s = StateVector::zero(n);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double norm = 0;
  for (Complex& a : s.amp) {
    a = Complex(gauss(rng), gauss(rng));
    norm += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(norm);
  for (Complex& a : s.amp) a *= scale;
  return s;
}

/// Places a k-qubit state onto the physical qubits given by `positions`
/// (logical q -> positions[q]); every other qubit is |0>.
inline StateVector embed(const StateVector& logical, const std::vector<int>& positions,
                         int num_physical) {
  if (static_cast<int>(positions.size()) != logical.n)
    throw Error("embedding positions do not match state size");
  StateVector full = StateVector::zero(num_physical);
  full.amp[0] = 0;
  for (std::size_t y = 0; y < logical.amp.size(); ++y) {
    std::size_t x = 0;
    for (int q = 0; q < logical.n; ++q) {
      if (y & (std::size_t{1} << q)) x |= std::size_t{1} << positions[static_cast<std::size_t>(q)];
    }
    full.amp[x] = logical.amp[y];
  }
  return full;
}

struct VerifyReport {
  bool pass = true;
  int trials = 0;
  int branches_checked = 0;
  double max_infidelity = 0.0;        // 1 - |<expected|branch>|^2, worst case
  double max_probability_deviation = 0.0;
  std::vector<double> branch_probabilities;  // from the final trial
  std::string detail;
};

}  // namespace rtg::sim
