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

#include <algorithm>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "rtg/bench.hpp"
#include "rtg/dag.hpp"
#include "rtg/metrics.hpp"
#include "test_util.hpp"

using namespace rtg;

TEST_CASE("empty circuit gives an empty dag") {
  const Dag dag = build_dag(Circuit(3));
  CHECK(dag.num_nodes == 0);
  CHECK(dag.arcs.empty());
  CHECK(asap_layers(Circuit(3)).empty());
}

TEST_CASE("single dependency chain") {
  Circuit c(2);
  c.add(Gate::h(0));
  c.add(Gate::cx(0, 1));
  const Dag dag = build_dag(c);
  CHECK(dag.num_nodes == 2);
  REQUIRE(dag.arcs.size() == 1);
  CHECK(dag.arcs[0] == std::pair<int, int>(0, 1));
}

TEST_CASE("classical wires create measure-to-conditional arcs") {
  // H(0), H(1), CNOT(0,1), Measure(0 -> b0), X on 1 if b0
  Circuit c(2, 1);
  c.add(Gate::h(0));
  c.add(Gate::h(1));
  c.add(Gate::cx(0, 1));
  c.add(Gate::measure(0, 0));
  c.add(Gate::conditional_pauli('x', 1, {0}));
  const Dag dag = build_dag(c);

  std::vector<std::pair<int, int>> expected{{0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}};
  std::vector<std::pair<int, int>> got = dag.arcs;
  std::sort(got.begin(), got.end());
  CHECK(got == expected);
}

TEST_CASE("per-wire order is reproduced along every wire") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 20; ++round) {
    const Circuit c = testutil::random_full_circuit(4, 3, 25, rng);
    const Dag dag = build_dag(c);
    // restricted to one wire, arc order must match gate-list order
    for (int q = 0; q < c.num_qubits(); ++q) {
      int prev = -1;
      for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& qs = c.gate(i).qubits;
        if (std::find(qs.begin(), qs.end(), q) == qs.end()) continue;
        if (prev >= 0) {
          const auto& succ = dag.successors[static_cast<std::size_t>(prev)];
          CHECK(std::find(succ.begin(), succ.end(), static_cast<int>(i)) != succ.end());
        }
        prev = static_cast<int>(i);
      }
    }
  }
}

TEST_CASE("asap layer examples") {
  Circuit parallel(2);
  parallel.add(Gate::h(0));
  parallel.add(Gate::h(1));
  CHECK(asap_layers(parallel).size() == 1);

  Circuit chain(2);
  chain.add(Gate::h(0));
  chain.add(Gate::cx(0, 1));
  chain.add(Gate::h(1));
  CHECK(asap_layers(chain).size() == 3);
}

TEST_CASE("asap layer count equals the per-wire depth oracle") {
  // includes the DJ benchmark circuit named by the layering contract
  const Circuit dj = bench::generate({bench::Family::DJ, 5, 3});
  CHECK(static_cast<int>(asap_layers(dj).size()) == testutil::per_wire_depth(dj));

  std::mt19937_64 rng(5);
  for (int round = 0; round < 30; ++round) {
    const Circuit c = testutil::random_full_circuit(5, 4, 40, rng);
    CHECK(depth(c) == testutil::per_wire_depth(c));
  }
}

TEST_CASE("gates within a layer act on disjoint wires") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 10; ++round) {
    const Circuit c = testutil::random_full_circuit(5, 3, 30, rng);
    for (const auto& layer : asap_layers(c)) {
      std::set<int> wires;
      for (int gi : layer) {
        std::vector<int> touched;
        detail::touched_wires(c.gate(static_cast<std::size_t>(gi)), c.num_qubits(), touched);
        for (int w : touched) CHECK(wires.insert(w).second);
      }
    }
  }
}

TEST_CASE("layer profile classification and precedence") {
  Circuit single(1);
  single.add(Gate::h(0));
  const LayerProfile p1 = layer_profile(single);
  CHECK(p1.n_1q == 1);
  CHECK(p1.n_2q == 0);
  CHECK(p1.n_tele == 0);

  // native CNOT and a virtual marker in the same layer: counts as teleported
  Circuit mixed(4);
  mixed.add(Gate::cx(0, 1));
  mixed.add(Gate::virtual_two_qubit(Gate::cx(2, 3), 0));
  const LayerProfile p2 = layer_profile(mixed);
  CHECK(p2.n_tele == 1);
  CHECK(p2.n_2q == 0);
  CHECK(p2.total() == 1);

  // H; CNOT; VirtualCNOT sequentially -> one layer of each class
  Circuit seq(3);
  seq.add(Gate::h(0));
  seq.add(Gate::cx(0, 1));
  seq.add(Gate::virtual_two_qubit(Gate::cx(0, 2), 0));
  const LayerProfile p3 = layer_profile(seq);
  CHECK(p3.n_1q == 1);
  CHECK(p3.n_2q == 1);
  CHECK(p3.n_tele == 1);
}

TEST_CASE("every layer contributes to exactly one class") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 20; ++round) {
    const Circuit c = testutil::random_full_circuit(5, 3, 30, rng);
    const LayerProfile p = layer_profile(c);
    CHECK(p.total() == static_cast<int>(asap_layers(c).size()));
  }
}

TEST_CASE("temporal depth follows the layer profile") {
  const TimingErrorModel model{0.1, 1.0, 3.0, 0.01, 0.1};
  CHECK(temporal_depth(Circuit(2), model) == 0.0);

  Circuit cnot(2);
  cnot.add(Gate::cx(0, 1));
  CHECK(temporal_depth(cnot, model) == 1.0);

  Circuit seq(3);
  seq.add(Gate::h(0));
  seq.add(Gate::cx(0, 1));
  seq.add(Gate::virtual_two_qubit(Gate::cx(0, 2), 0));
  CHECK(temporal_depth(seq, model) == Catch::Approx(4.1).epsilon(1e-12));
}

TEST_CASE("temporal depth is linear in each duration") {
  std::mt19937_64 rng(29);
  for (int round = 0; round < 10; ++round) {
    const Circuit c = testutil::random_full_circuit(5, 3, 30, rng);
    const LayerProfile p = layer_profile(c);
    TimingErrorModel model;
    std::uniform_real_distribution<double> dur(0.2, 4.0);
    model.t_1q = dur(rng);
    model.t_2q = dur(rng);
    model.t_tele = dur(rng);
    const double base = temporal_depth(c, model);
    TimingErrorModel scaled = model;
    scaled.t_tele = 2 * model.t_tele;
    CHECK(temporal_depth(c, scaled) ==
          Catch::Approx(base + model.t_tele * p.n_tele).margin(1e-9));
    scaled = model;
    scaled.t_1q = 3 * model.t_1q;
    CHECK(temporal_depth(c, scaled) ==
          Catch::Approx(base + 2 * model.t_1q * p.n_1q).margin(1e-9));
  }
}

TEST_CASE("gate counts definition") {
  Circuit c(3);
  c.add(Gate::cx(0, 1));
  c.add(Gate::cx(1, 2));
  const GateCounts counts = gate_counts(c, {0, 1});
  CHECK(counts.n_cnot == 2);
  CHECK(counts.n_cnot_data == 1);
  CHECK(counts.n_g == 2);
  CHECK(counts.n_tele == 0);
}

TEST_CASE("pre-expansion markers count as teleported gates") {
  Circuit c(4);
  c.add(Gate::cx(0, 1));
  c.add(Gate::virtual_two_qubit(Gate::cx(0, 3), 0));
  const GateCounts counts = gate_counts(c, {0, 1, 3});
  CHECK(counts.n_cnot == 2);
  CHECK(counts.n_tele == 1);
  CHECK(counts.n_g == 1);
}

TEST_CASE("swap weighs three CNOTs in counts") {
  Circuit c(3);
  c.add(Gate::swap(0, 1));
  c.add(Gate::cx(1, 2));
  const GateCounts counts = gate_counts(c, {0, 1});
  CHECK(counts.n_cnot == 4);
  CHECK(counts.n_cnot_data == 3);
  CHECK(gate_counts(lower_swaps(c), {0, 1}).n_cnot == counts.n_cnot);
}

TEST_CASE("gate_counts rejects data qubits outside the circuit") {
  Circuit c(2);
  CHECK_THROWS_AS(gate_counts(c, {5}), ValidationError);
}
