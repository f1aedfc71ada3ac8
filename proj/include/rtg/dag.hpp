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

#include <algorithm>
#include <utility>
#include <vector>

#include "rtg/circuit.hpp"

namespace rtg {

/// Wire-dependency graph of a circuit. Node i is gate i of the source
/// circuit; an arc (a, b) means gate b consumes a wire (qubit or classical
/// bit) last touched by gate a.
struct Dag {
  std::size_t num_nodes = 0;
  std::vector<std::pair<int, int>> arcs;
  std::vector<std::vector<int>> successors;    // indexed by gate
  std::vector<std::vector<int>> predecessors;  // indexed by gate
};

namespace detail {

/// Wires touched by a gate: qubit wires first, then classical-bit wires
/// offset by num_qubits. Measure writes its bit; ConditionalPauli reads its
/// condition bits. Reads and writes are ordered alike (total order per wire).
inline void touched_wires(const Gate& g, int num_qubits, std::vector<int>& out) {
  out.clear();
  for (int q : g.qubits) out.push_back(q);
  for (int b : g.clbits) out.push_back(num_qubits + b);
  if (g.condition) {
    for (int b : g.condition->bits) out.push_back(num_qubits + b);
  }
}

}  // namespace detail

inline Dag build_dag(const Circuit& circuit) {
  circuit.validate();
  Dag dag;
  dag.num_nodes = circuit.size();
  dag.successors.resize(dag.num_nodes);
  dag.predecessors.resize(dag.num_nodes);

  const int num_wires = circuit.num_qubits() + circuit.num_clbits();
  std::vector<int> last(static_cast<std::size_t>(num_wires), -1);
  std::vector<int> wires;
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    detail::touched_wires(circuit.gate(i), circuit.num_qubits(), wires);
    for (int w : wires) {
      const int prev = last[static_cast<std::size_t>(w)];
      if (prev >= 0 && prev != static_cast<int>(i)) {
        // avoid duplicate arcs when two wires connect the same gate pair
        auto& succ = dag.successors[static_cast<std::size_t>(prev)];
        if (std::find(succ.begin(), succ.end(), static_cast<int>(i)) == succ.end()) {
          succ.push_back(static_cast<int>(i));
          dag.predecessors[i].push_back(prev);
          dag.arcs.emplace_back(prev, static_cast<int>(i));
        }
      }
      last[static_cast<std::size_t>(w)] = static_cast<int>(i);
    }
  }
  return dag;
}

/// As-soon-as-possible layering: layer(g) = 1 + max over predecessor layers
/// (1 for gates with no predecessors). Returns layers as lists of gate
/// indices; the layer count equals the longest dependency path.
inline std::vector<std::vector<int>> asap_layers(const Dag& dag) {
  std::vector<int> layer(dag.num_nodes, 1);
  int max_layer = dag.num_nodes ? 1 : 0;
  // gates are already topologically ordered (arcs always point forward)
  for (std::size_t i = 0; i < dag.num_nodes; ++i) {
    for (int p : dag.predecessors[i]) {
      layer[i] = std::max(layer[i], layer[static_cast<std::size_t>(p)] + 1);
    }
    max_layer = std::max(max_layer, layer[i]);
  }
  std::vector<std::vector<int>> layers(static_cast<std::size_t>(max_layer));
  for (std::size_t i = 0; i < dag.num_nodes; ++i) {
    layers[static_cast<std::size_t>(layer[i] - 1)].push_back(static_cast<int>(i));
  }
  return layers;
}

inline std::vector<std::vector<int>> asap_layers(const Circuit& circuit) {
  return asap_layers(build_dag(circuit));
}

/// Plain circuit depth: the number of ASAP layers.
inline int depth(const Circuit& circuit) {
  return static_cast<int>(asap_layers(circuit).size());
}

}  // namespace rtg
