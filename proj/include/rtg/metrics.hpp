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

#include <set>
#include <unordered_set>
#include <vector>

#include "rtg/circuit.hpp"
#include "rtg/dag.hpp"

namespace rtg {

/// Gate durations and error probabilities used by the temporal-depth and
/// error-cost metrics. Durations are in arbitrary time units.
struct TimingErrorModel {
  double t_1q = 0.1;   // single-qubit-class layer
  double t_2q = 1.0;   // native two-qubit layer
  double t_tele = 3.0; // teleported-gate layer
  double p_2q = 0.01;  // native two-qubit gate error probability
  double p_tele = 0.1; // teleported two-qubit gate error probability

  void validate() const {
    if (t_1q <= 0 || t_2q <= 0 || t_tele <= 0) throw ValidationError("durations must be > 0");
    if (p_2q < 0 || p_2q >= 1 || p_tele < 0 || p_tele >= 1)
      throw ValidationError("error probabilities must lie in [0, 1)");
  }
};

/// Layer classification counts. Precedence within a layer: teleported >
/// native two-qubit > single-qubit class. Measure, Reset and
/// ConditionalPauli gates count as single-qubit class.
struct LayerProfile {
  int n_1q = 0;
  int n_2q = 0;
  int n_tele = 0;

  int total() const { return n_1q + n_2q + n_tele; }
};

struct GateCounts {
  int n_cnot = 0;       // all two-qubit gates (SWAP counted as 3)
  int n_tele = 0;       // virtual markers, or expansion groups post-expansion
  int n_cnot_data = 0;  // two-qubit gates with both operands in the data set
  int n_g = 0;          // native two-qubit gates outside teleport groups
  int n_measure = 0;
  int n_reset = 0;
};

inline LayerProfile layer_profile(const Circuit& circuit) {
  LayerProfile profile;
  for (const auto& layer : asap_layers(circuit)) {
    bool has_tele = false;
    bool has_2q = false;
    for (int gi : layer) {
      const Gate& g = circuit.gate(static_cast<std::size_t>(gi));
      if (g.kind == GateKind::VirtualTwoQubit) has_tele = true;
      else if (g.kind == GateKind::TwoQubit) has_2q = true;
    }
    if (has_tele) ++profile.n_tele;
    else if (has_2q) ++profile.n_2q;
    else ++profile.n_1q;
  }
  return profile;
}

/// Maximum cumulative gate execution time over the circuit's layers:
/// t_1q * n_1q + t_2q * n_2q + t_tele * n_tele.
inline double temporal_depth(const Circuit& circuit, const TimingErrorModel& model) {
  model.validate();
  const LayerProfile p = layer_profile(circuit);
  return model.t_1q * p.n_1q + model.t_2q * p.n_2q + model.t_tele * p.n_tele;
}

/// Resource counts relative to a data-qubit set. A SWAP counts as 3 CNOTs.
/// n_tele counts pre-expansion virtual markers plus distinct expansion
/// groups, so the same teleport is never counted twice across the two
/// representations.
inline GateCounts gate_counts(const Circuit& circuit, const std::vector<int>& data_qubits) {
  std::unordered_set<int> data(data_qubits.begin(), data_qubits.end());
  for (int q : data) {
    if (q < 0 || q >= circuit.num_qubits())
      throw ValidationError("data qubit " + std::to_string(q) + " outside circuit");
  }
  GateCounts counts;
  std::set<int> groups;
  for (const Gate& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::TwoQubit: {
        const int weight = (g.name == "swap") ? 3 : 1;
        counts.n_cnot += weight;
        if (g.group >= 0) {
          groups.insert(g.group);  // teleport internals are priced as one teleported gate
        } else {
          counts.n_g += weight;
        }
        if (data.count(g.qubits[0]) && data.count(g.qubits[1])) counts.n_cnot_data += weight;
        break;
      }
      case GateKind::VirtualTwoQubit:
        counts.n_cnot += 1;
        counts.n_tele += 1;
        break;
      case GateKind::Measure:
        counts.n_measure += 1;
        break;
      case GateKind::Reset:
        counts.n_reset += 1;
        break;
      default:
        break;
    }
  }
  counts.n_tele += static_cast<int>(groups.size());
  return counts;
}

}  // namespace rtg
