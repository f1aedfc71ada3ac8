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

#include "rtg/sim.hpp"
#include "rtg/teleport.hpp"
#include "rtg/topology.hpp"

namespace rtg::sim {

/// Places a 2-qubit (control, target) state into a template-shaped register
/// with all auxiliaries in |0>. `pair_state` uses control as the most
/// significant bit, matching the 4x4 matrix convention.
inline StateVector embed_pair(const std::array<Complex, 4>& pair_state, int control, int target,
                              int num_qubits) {
  StateVector full = StateVector::zero(num_qubits);
  full.amp[0] = 0;
  for (int ic = 0; ic < 2; ++ic) {
    for (int it = 0; it < 2; ++it) {
      std::size_t x = 0;
      if (ic) x |= std::size_t{1} << control;
      if (it) x |= std::size_t{1} << target;
      full.amp[x] = pair_state[static_cast<std::size_t>(ic * 2 + it)];
    }
  }
  return full;
}

/// Checks each measurement branch of a teleport template against the target
/// two-qubit unitary on `trials` random data states, with auxiliaries
/// required back in |0>. Branch probabilities must be uniform 2^-N.
inline VerifyReport verify_teleport(const TeleportTemplate& tpl, const Matrix4& target,
                                    int trials, double tol, std::uint64_t seed = 7) {
  VerifyReport report;
  report.trials = trials;
  std::mt19937_64 rng(seed);
  const int num_qubits = tpl.body.num_qubits();
  const double expected_prob = std::pow(0.5, tpl.n_aux);

  for (int trial = 0; trial < trials; ++trial) {
    const StateVector pair = random_state(2, rng);
    std::array<Complex, 4> in{};
    std::array<Complex, 4> out{};
    for (int r = 0; r < 4; ++r) in[static_cast<std::size_t>(r)] = pair.amp[static_cast<std::size_t>(r)];
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c)
        out[static_cast<std::size_t>(r)] += target[static_cast<std::size_t>(r * 4 + c)] *
                                            in[static_cast<std::size_t>(c)];
    }
    const StateVector input = embed_pair(in, tpl.control(), tpl.target(), num_qubits);
    const StateVector expected = embed_pair(out, tpl.control(), tpl.target(), num_qubits);

    const std::vector<Branch> branches = enumerate_branches(tpl.body, input);
    if (trial == trials - 1) report.branch_probabilities.clear();
    for (const Branch& b : branches) {
      ++report.branches_checked;
      const double infidelity = 1.0 - fidelity(expected, b.state);
      report.max_infidelity = std::max(report.max_infidelity, infidelity);
      report.max_probability_deviation =
          std::max(report.max_probability_deviation, std::abs(b.probability - expected_prob));
      if (trial == trials - 1) report.branch_probabilities.push_back(b.probability);
      if (infidelity > tol) {
        report.pass = false;
        std::string bits;
        for (int o : b.outcomes) bits += static_cast<char>('0' + o);
        report.detail = "branch " + bits + " deviates by " + std::to_string(infidelity);
      }
    }
  }
  if (report.max_probability_deviation > 1e-9) {
    report.pass = false;
    if (report.detail.empty()) report.detail = "branch probabilities are not uniform";
  }
  return report;
}

/// Checks that a routed/expanded physical circuit reproduces the original
/// logical circuit: random logical inputs go in through the initial layout,
/// every measurement branch of `final_circuit` must match the original's
/// output read back through the final layout, and all non-data physical
/// qubits must return to |0>.
inline VerifyReport verify_routed_equivalence(const Circuit& original, const Circuit& final_circuit,
                                              const Layout& initial, const Layout& final_layout,
                                              int trials, double tol, std::uint64_t seed = 7) {
  original.validate();
  final_circuit.validate();
  for (const Gate& g : original.gates()) {
    if (g.kind == GateKind::Measure || g.kind == GateKind::Reset)
      throw Error("equivalence oracle requires a measurement-free original circuit");
  }
  if (initial.size() != original.num_qubits() || final_layout.size() != original.num_qubits())
    throw Error("layout sizes do not match the original circuit");

  VerifyReport report;
  report.trials = trials;
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    StateVector logical_in = random_state(original.num_qubits(), rng);
    StateVector logical_out = logical_in;
    for (const Gate& g : original.gates()) apply_gate(logical_out, g);

    const StateVector physical_in =
        embed(logical_in, initial.physical, final_circuit.num_qubits());
    const StateVector expected =
        embed(logical_out, final_layout.physical, final_circuit.num_qubits());

    for (const Branch& b : enumerate_branches(final_circuit, physical_in)) {
      if (b.zero_probability) continue;
      ++report.branches_checked;
      const double infidelity = 1.0 - fidelity(expected, b.state);
      report.max_infidelity = std::max(report.max_infidelity, infidelity);
      if (infidelity > tol) {
        report.pass = false;
        if (report.detail.empty())
          report.detail = "trial " + std::to_string(trial) + " deviates by " +
                          std::to_string(infidelity);
      }
    }
  }
  return report;
}

/// Target matrix for a teleport template, in the (control, target) basis.
inline Matrix4 template_target(const TeleportTemplate& tpl) {
  switch (tpl.kind) {
    case TeleportKind::Cnot:
      return two_qubit_matrix(Gate::cx(0, 1));
    case TeleportKind::Cu:
      return two_qubit_matrix(Gate::cu(tpl.unitary, 0, 1));
    case TeleportKind::Rzz:
      return two_qubit_matrix(Gate::rzz(tpl.theta, 0, 1));
  }
  throw Error("unknown template kind");
}

}  // namespace rtg::sim
