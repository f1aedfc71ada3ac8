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

// Minimal tour: route one long-range CNOT over a 3-qubit line, once with
// SWAPs only and once through a teleported gate, then check both results
// against the exhaustive-branch simulator.

#include <iostream>

#include "rtg/rtg.hpp"
#include "rtg/serialize.hpp"
#include "rtg/verify.hpp"

int main() {
  rtg::Circuit circuit(3);
  circuit.add(rtg::Gate::h(0));
  circuit.add(rtg::Gate::cx(0, 2));

  // 5 physical qubits: data line 0-1-2 plus a detour 0-3-4-2
  rtg::CouplingMap map(5, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {4, 2}});
  const rtg::Layout layout({0, 1, 2});

  const rtg::TimingErrorModel model;
  rtg::RtgConfig config;

  config.mode = rtg::RtgMode::Plain;
  const rtg::RtgResult result = rtg::rtg_search(circuit, map, layout, model, config);

  std::cout << "baseline temporal depth: " << result.baseline.d_t << "\n";
  std::cout << "best temporal depth:     " << result.best.d_t << " using "
            << result.best.subset.size() << " virtual edge(s)\n";
  std::cout << "expanded circuit:\n" << rtg::serialize(result.expanded);

  const auto report = rtg::sim::verify_routed_equivalence(
      circuit, result.expanded, layout, result.best.routed.final_layout, 10, 1e-9);
  std::cout << "equivalence: " << (report.pass ? "pass" : "FAIL") << " (max infidelity "
            << report.max_infidelity << ")\n";
  return report.pass ? 0 : 1;
}
