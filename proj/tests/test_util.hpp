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

// Test-only oracles. These deliberately re-derive results through code
// paths independent of the library implementation they check.

#pragma once

#include <complex>
#include <random>
#include <vector>

#include "rtg/circuit.hpp"
#include "rtg/sim.hpp"

namespace rtg::testutil {

/// Independent depth oracle: greedy per-wire counter. depth(g) = 1 + max of
/// the counters of every wire the gate touches.
inline int per_wire_depth(const Circuit& circuit) {
  std::vector<int> qubit_level(static_cast<std::size_t>(circuit.num_qubits()), 0);
  std::vector<int> clbit_level(static_cast<std::size_t>(circuit.num_clbits()), 0);
  int depth = 0;
  for (const Gate& g : circuit.gates()) {
    int level = 0;
    for (int q : g.qubits) level = std::max(level, qubit_level[static_cast<std::size_t>(q)]);
    for (int b : g.clbits) level = std::max(level, clbit_level[static_cast<std::size_t>(b)]);
    if (g.condition) {
      for (int b : g.condition->bits)
        level = std::max(level, clbit_level[static_cast<std::size_t>(b)]);
    }
    ++level;
    for (int q : g.qubits) qubit_level[static_cast<std::size_t>(q)] = level;
    for (int b : g.clbits) clbit_level[static_cast<std::size_t>(b)] = level;
    if (g.condition) {
      for (int b : g.condition->bits) clbit_level[static_cast<std::size_t>(b)] = level;
    }
    depth = std::max(depth, level);
  }
  return depth;
}

using DenseMatrix = std::vector<std::vector<Complex>>;

/// Kronecker-product oracle: the full 2^n x 2^n matrix of one gate, built
/// by explicit tensor products (qubit 0 is the least significant bit).
inline DenseMatrix full_matrix(const Gate& g, int num_qubits) {
  const std::size_t dim = std::size_t{1} << num_qubits;
  DenseMatrix m(dim, std::vector<Complex>(dim, Complex(0, 0)));
  if (g.kind == GateKind::OneQubit) {
    const sim::Matrix2 u = sim::one_qubit_matrix(g);
    const int q = g.qubits[0];
    for (std::size_t col = 0; col < dim; ++col) {
      const int bit = static_cast<int>((col >> q) & 1);
      for (int out = 0; out < 2; ++out) {
        const std::size_t row = (col & ~(std::size_t{1} << q)) |
                                (static_cast<std::size_t>(out) << q);
        m[row][col] = u[static_cast<std::size_t>(out * 2 + bit)];
      }
    }
    return m;
  }
  const sim::Matrix4 u = sim::two_qubit_matrix(g);
  const int qa = g.qubits[0];
  const int qb = g.qubits[1];
  for (std::size_t col = 0; col < dim; ++col) {
    const int ba = static_cast<int>((col >> qa) & 1);
    const int bb = static_cast<int>((col >> qb) & 1);
    const int in = ba * 2 + bb;
    for (int out = 0; out < 4; ++out) {
      const std::size_t base = col & ~(std::size_t{1} << qa) & ~(std::size_t{1} << qb);
      const std::size_t row = base | (static_cast<std::size_t>(out >> 1) << qa) |
                              (static_cast<std::size_t>(out & 1) << qb);
      m[row][col] = u[static_cast<std::size_t>(out * 4 + in)];
    }
  }
  return m;
}

inline sim::StateVector apply_full_matrix(const DenseMatrix& m, const sim::StateVector& s) {
  sim::StateVector out = s;
  for (std::size_t r = 0; r < m.size(); ++r) {
    Complex acc(0, 0);
    for (std::size_t c = 0; c < m.size(); ++c) acc += m[r][c] * s.amp[c];
    out.amp[r] = acc;
  }
  return out;
}

/// Full unitary of a measurement-free circuit via the Kronecker oracle.
inline DenseMatrix circuit_unitary(const Circuit& circuit) {
  const std::size_t dim = std::size_t{1} << circuit.num_qubits();
  DenseMatrix u(dim, std::vector<Complex>(dim, Complex(0, 0)));
  for (std::size_t i = 0; i < dim; ++i) u[i][i] = Complex(1, 0);
  for (const Gate& g : circuit.gates()) {
    const DenseMatrix gm = full_matrix(g, circuit.num_qubits());
    DenseMatrix next(dim, std::vector<Complex>(dim, Complex(0, 0)));
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t k = 0; k < dim; ++k) {
        if (gm[r][k] == Complex(0, 0)) continue;
        for (std::size_t c = 0; c < dim; ++c) next[r][c] += gm[r][k] * u[k][c];
      }
    }
    u = std::move(next);
  }
  return u;
}

/// Largest |a - e^{i phi} b| over entries, minimized over the global phase.
inline double unitary_distance_up_to_phase(const DenseMatrix& a, const DenseMatrix& b) {
  Complex phase(0, 0);
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < a.size(); ++c) phase += std::conj(b[r][c]) * a[r][c];
  }
  const double mag = std::abs(phase);
  const Complex rot = mag > 1e-12 ? phase / mag : Complex(1, 0);
  double worst = 0;
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < a.size(); ++c)
      worst = std::max(worst, std::abs(a[r][c] - rot * b[r][c]));
  }
  return worst;
}

/// Random static circuit over the full unitary vocabulary.
inline Circuit random_unitary_circuit(int num_qubits, int num_gates, std::mt19937_64& rng) {
  Circuit c(num_qubits);
  std::uniform_int_distribution<int> qubit(0, num_qubits - 1);
  std::uniform_int_distribution<int> pick(0, 7);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (int i = 0; i < num_gates; ++i) {
    const int q = qubit(rng);
    int r = qubit(rng);
    while (r == q) r = qubit(rng);
    switch (pick(rng)) {
      case 0: c.add(Gate::h(q)); break;
      case 1: c.add(Gate::t(q)); break;
      case 2: c.add(Gate::rz(angle(rng), q)); break;
      case 3: c.add(Gate::ry(angle(rng), q)); break;
      case 4: c.add(Gate::cx(q, r)); break;
      case 5: c.add(Gate::cz(q, r)); break;
      case 6: c.add(Gate::rzz(angle(rng), q, r)); break;
      default: c.add(Gate::x(q)); break;
    }
  }
  return c;
}

/// Random circuit that also exercises measurement, reset, conditionals and
/// virtual markers; used for serialization round-trips.
inline Circuit random_full_circuit(int num_qubits, int num_clbits, int num_gates,
                                   std::mt19937_64& rng) {
  Circuit c(num_qubits, num_clbits);
  std::uniform_int_distribution<int> qubit(0, num_qubits - 1);
  std::uniform_int_distribution<int> clbit(0, num_clbits - 1);
  std::uniform_int_distribution<int> pick(0, 10);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  std::vector<int> written;
  for (int i = 0; i < num_gates; ++i) {
    const int q = qubit(rng);
    int r = qubit(rng);
    while (r == q) r = qubit(rng);
    switch (pick(rng)) {
      case 0: c.add(Gate::h(q)); break;
      case 1: c.add(Gate::u3(angle(rng), angle(rng), angle(rng), q)); break;
      case 2: c.add(Gate::cx(q, r)); break;
      case 3: c.add(Gate::rzz(angle(rng), q, r)); break;
      case 4: c.add(Gate::swap(q, r)); break;
      case 5: {
        const Unitary2 u{Complex(0, 1), 0, 0, Complex(0, -1)};
        c.add(Gate::cu(u, q, r));
        break;
      }
      case 6: c.add(Gate::virtual_two_qubit(Gate::cx(q, r), 0)); break;
      case 7: {
        const int b = clbit(rng);
        c.add(Gate::measure(q, b, (pick(rng) % 2) ? Basis::X : Basis::Z));
        written.push_back(b);
        break;
      }
      case 8: c.add(Gate::reset(q)); break;
      case 9:
        if (!written.empty()) {
          const int b = written[static_cast<std::size_t>(pick(rng)) % written.size()];
          c.add(Gate::conditional_pauli((pick(rng) % 2) ? 'x' : 'z', q, {b}, pick(rng) % 2));
        } else {
          c.add(Gate::z(q));
        }
        break;
      default: c.add(Gate::s(q)); break;
    }
  }
  return c;
}

}  // namespace rtg::testutil
