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

#include <cmath>
#include <string>
#include <vector>

#include "rtg/circuit.hpp"
#include "rtg/router.hpp"
#include "rtg/topology.hpp"

namespace rtg {

enum class TeleportKind { Cnot, Cu, Rzz };

/// Teleported two-qubit gate over N auxiliary qubits. The body acts on
/// qubits [control = 0, a_1..a_N = 1..N, target = N+1] and N classical bits
/// (bit i-1 records the measurement of a_i).
///
/// Construction: auxiliaries pair up into Bell pairs built in one H layer
/// plus one CNOT layer; when N is odd the last auxiliary instead forms a
/// half-pair directly with the target wire (CNOT kind) or with a_N (CU
/// kind). A single layer of linking CNOTs then stitches control, pairs and
/// target together. Odd-indexed auxiliaries are measured in Z, even-indexed
/// in X (as H plus Z-measurement), and the residual byproducts reduce to an
/// X correction conditioned on the Z-outcome parity plus a Z correction on
/// the control conditioned on the X-outcome parity. For CU/RZZ the chain
/// instead copies the control value onto a_N, fixes it up with a
/// conditional X, applies the gate between a_N and the target, and
/// uncomputes a_N with an X measurement.
struct TeleportTemplate {
  TeleportKind kind = TeleportKind::Cnot;
  int n_aux = 0;
  Circuit body;
  Unitary2 unitary{};   // CU kind
  double theta = 0.0;   // RZZ kind
  int data_touching_cnots = 0;
  int quantum_layer_depth = 0;  // depth of the kind's fixed execution schedule

  int control() const { return 0; }
  int target() const { return n_aux + 1; }
};

// Schedule depths of the two template families. Every template with N >= 2
// fills its schedule exactly; N = 1 degenerates to fewer occupied layers.
inline constexpr int kCnotTemplateDepth = 6;
inline constexpr int kCuTemplateDepth = 9;

namespace detail {

inline int count_data_touching_cnots(const Circuit& body, int control, int target) {
  int count = 0;
  for (const Gate& g : body.gates()) {
    if (g.kind == GateKind::TwoQubit && g.name == "cx" &&
        (g.qubits[0] == control || g.qubits[1] == control || g.qubits[0] == target ||
         g.qubits[1] == target))
      ++count;
  }
  return count;
}

/// Emits the Bell-pair chain that delivers the control value (mod Bell
/// byproducts) to `sink` through auxiliaries aux_first..aux_last. Appends
/// prep and link gates to `body` and fills the Z-/X-measured index lists.
/// `sink` is the target wire (CNOT kind) or a_N (CU kind); for an odd
/// auxiliary count the last auxiliary half-pairs with the sink.
inline void emit_chain(Circuit& body, int control, int sink, int aux_first, int aux_last,
                       std::vector<int>& z_measured, std::vector<int>& x_measured) {
  const int count = aux_last - aux_first + 1;
  const bool odd = (count % 2) != 0;

  // Bell-pair preparation: one H layer, one CNOT layer.
  for (int a = aux_first; a + 1 <= aux_last; a += 2) {
    body.add(Gate::h(a));
    body.add(Gate::cx(a, a + 1));
  }
  if (odd) {
    body.add(Gate::h(aux_last));
    body.add(Gate::cx(aux_last, sink));
  }

  // Linking layer: control into the first auxiliary, then pair-to-pair.
  body.add(Gate::cx(control, aux_first));
  for (int a = aux_first + 1; a + 1 <= aux_last; a += 2) {
    body.add(Gate::cx(a, a + 1));
  }
  if (!odd) {
    body.add(Gate::cx(aux_last, sink));
  }

  for (int a = aux_first; a <= aux_last; ++a) {
    const bool odd_position = ((a - aux_first) % 2) == 0;
    (odd_position ? z_measured : x_measured).push_back(a);
  }
}

inline void emit_measurements(Circuit& body, const std::vector<int>& z_measured,
                              const std::vector<int>& x_measured,
                              std::vector<int>& z_bits, std::vector<int>& x_bits) {
  for (int a : x_measured) body.add(Gate::h(a));
  for (int a : z_measured) {
    body.add(Gate::measure(a, a - 1));
    z_bits.push_back(a - 1);
  }
  for (int a : x_measured) {
    body.add(Gate::measure(a, a - 1));
    x_bits.push_back(a - 1);
  }
}

}  // namespace detail

/// Long-range CNOT between control and target through n_aux auxiliaries:
/// N+1 CNOTs, N measurements, two CNOTs touching the data qubits, and
/// parity-conditioned X (target) / Z (control) corrections.
inline TeleportTemplate synth_teleported_cnot(int n_aux) {
  if (n_aux < 1)
    throw ValidationError("teleported CNOT needs at least one auxiliary; emit a native CNOT");

  TeleportTemplate tpl;
  tpl.kind = TeleportKind::Cnot;
  tpl.n_aux = n_aux;
  tpl.quantum_layer_depth = kCnotTemplateDepth;

  Circuit body(n_aux + 2, n_aux);
  const int control = tpl.control();
  const int target = tpl.target();

  std::vector<int> z_measured, x_measured, z_bits, x_bits;
  detail::emit_chain(body, control, target, 1, n_aux, z_measured, x_measured);
  detail::emit_measurements(body, z_measured, x_measured, z_bits, x_bits);

  if (!z_bits.empty()) body.add(Gate::conditional_pauli('x', target, z_bits));
  if (!x_bits.empty()) body.add(Gate::conditional_pauli('z', control, x_bits));
  for (int a = 1; a <= n_aux; ++a) body.add(Gate::reset(a));

  tpl.body = std::move(body);
  tpl.data_touching_cnots = detail::count_data_touching_cnots(tpl.body, control, target);
  return tpl;
}

namespace detail {

inline TeleportTemplate synth_teleported_controlled(int n_aux, TeleportKind kind,
                                                    const Unitary2& u, double theta) {
  if (n_aux < 1)
    throw ValidationError("teleported controlled gate needs at least one auxiliary");

  TeleportTemplate tpl;
  tpl.kind = kind;
  tpl.n_aux = n_aux;
  tpl.unitary = u;
  tpl.theta = theta;
  tpl.quantum_layer_depth = kCuTemplateDepth;

  Circuit body(n_aux + 2, n_aux);
  const int control = tpl.control();
  const int target = tpl.target();
  const int relay = n_aux;  // auxiliary adjacent to the target; holds the control copy

  std::vector<int> z_bits, x_bits;
  if (n_aux == 1) {
    body.add(Gate::cx(control, relay));
  } else {
    std::vector<int> z_measured, x_measured;
    emit_chain(body, control, relay, 1, n_aux - 1, z_measured, x_measured);
    emit_measurements(body, z_measured, x_measured, z_bits, x_bits);
    if (!z_bits.empty()) body.add(Gate::conditional_pauli('x', relay, z_bits));
  }

  body.add(kind == TeleportKind::Rzz ? Gate::rzz(theta, relay, target)
                                     : Gate::cu(u, relay, target));

  body.add(Gate::h(relay));
  body.add(Gate::measure(relay, relay - 1));
  x_bits.push_back(relay - 1);
  body.add(Gate::conditional_pauli('z', control, x_bits));
  for (int a = 1; a <= n_aux; ++a) body.add(Gate::reset(a));

  tpl.body = std::move(body);
  tpl.data_touching_cnots = count_data_touching_cnots(tpl.body, control, target);
  return tpl;
}

}  // namespace detail

/// Long-range controlled-U through n_aux auxiliaries: N CNOTs, one CU gate
/// between the last auxiliary and the target, N measurements.
inline TeleportTemplate synth_teleported_cu(int n_aux, const Unitary2& u) {
  const auto id = [](int r, int c) { return r == c ? Complex(1, 0) : Complex(0, 0); };
  double deviation = 0;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      Complex dot(0, 0);
      for (int k = 0; k < 2; ++k) dot += std::conj(u[k * 2 + r]) * u[k * 2 + c];
      deviation = std::max(deviation, std::abs(dot - id(r, c)));
    }
  }
  if (deviation > 1e-12)
    throw ValidationError("controlled-U matrix is not unitary (deviation " +
                          std::to_string(deviation) + ")");
  return detail::synth_teleported_controlled(n_aux, TeleportKind::Cu, u, 0.0);
}

/// Long-range RZZ(theta); same skeleton as the CU template.
inline TeleportTemplate synth_teleported_rzz(int n_aux, double theta) {
  return detail::synth_teleported_controlled(n_aux, TeleportKind::Rzz, Unitary2{}, theta);
}

/// The template matching a virtual marker gate.
inline TeleportTemplate template_for_marker(const Gate& marker, int n_aux) {
  if (marker.name == "cx") return synth_teleported_cnot(n_aux);
  if (marker.name == "cz") return synth_teleported_cu(n_aux, {1, 0, 0, -1});
  if (marker.name == "rzz") return synth_teleported_rzz(n_aux, marker.params.at(0));
  if (marker.name == "cu") return synth_teleported_cu(n_aux, marker.cu_matrix());
  throw ValidationError("no teleport template for gate '" + marker.name + "'");
}

/// Replaces every virtual marker in a routed circuit by its teleportation
/// subcircuit on the edge's auxiliary path. Fresh classical bits are
/// allocated per instance and each instance's gates carry a group tag.
/// SWAPs are lowered first, so the result contains only native-edge
/// two-qubit gates.
inline Circuit expand_teleportations(const RoutedCircuit& routed, const CouplingMap& map) {
  // qubit-disjointness across edges guarantees no aux qubit is shared
  // between unexpired teleports
  {
    std::set<int> used;
    for (const VirtualEdge& e : map.virtual_edges()) {
      std::vector<int> qubits{e.endpoints.a, e.endpoints.b};
      qubits.insert(qubits.end(), e.aux_path.begin(), e.aux_path.end());
      for (int q : qubits) {
        if (!used.insert(q).second)
          throw ValidationError("virtual edges share qubit " + std::to_string(q) +
                                "; auxiliary paths would overlap in time");
      }
    }
  }

  const Circuit source = lower_swaps(routed.circuit);
  int extra_bits = 0;
  for (const Gate& g : source.gates()) {
    if (g.kind != GateKind::VirtualTwoQubit) continue;
    if (g.edge < 0 || g.edge >= static_cast<int>(map.virtual_edges().size()))
      throw ValidationError("marker references unknown virtual edge " + std::to_string(g.edge));
    extra_bits += map.virtual_edges()[static_cast<std::size_t>(g.edge)].distance();
  }

  Circuit out(source.num_qubits(), source.num_clbits() + extra_bits);
  out.set_data_qubits(source.data_qubits());
  int next_bit = source.num_clbits();
  int next_group = 0;
  for (const Gate& g : source.gates()) {
    if (g.kind != GateKind::VirtualTwoQubit) {
      out.add(g);
      continue;
    }
    const VirtualEdge& edge = map.virtual_edges()[static_cast<std::size_t>(g.edge)];
    if (QubitPair(g.qubits[0], g.qubits[1]) != edge.endpoints)
      throw ValidationError("marker operands do not match its virtual edge");

    // orient the auxiliary path from the marker's first operand
    std::vector<int> path = edge.aux_path;
    if (g.qubits[0] != edge.endpoints.a) std::reverse(path.begin(), path.end());

    const TeleportTemplate tpl = template_for_marker(g, edge.distance());
    std::vector<int> qubit_of(static_cast<std::size_t>(tpl.body.num_qubits()));
    qubit_of[0] = g.qubits[0];
    for (int i = 0; i < tpl.n_aux; ++i) qubit_of[static_cast<std::size_t>(i + 1)] = path[i];
    qubit_of[static_cast<std::size_t>(tpl.target())] = g.qubits[1];

    for (const Gate& tg : tpl.body.gates()) {
      Gate mapped = tg;
      for (int& q : mapped.qubits) q = qubit_of[static_cast<std::size_t>(q)];
      for (int& b : mapped.clbits) b += next_bit;
      if (mapped.condition) {
        for (int& b : mapped.condition->bits) b += next_bit;
      }
      mapped.group = next_group;
      out.add(std::move(mapped));
    }
    next_bit += tpl.n_aux;
    ++next_group;
  }
  return out;
}

}  // namespace rtg
