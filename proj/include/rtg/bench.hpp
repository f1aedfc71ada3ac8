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
#include <cmath>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rtg/circuit.hpp"

namespace rtg::bench {

enum class Family { DJ, GHZ, GraphState, QFT, QFTEntangled, QAOAMaxCut };

inline Family family_from_string(const std::string& name) {
  std::string lower;
  for (char c : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "dj") return Family::DJ;
  if (lower == "ghz") return Family::GHZ;
  if (lower == "graphstate") return Family::GraphState;
  if (lower == "qft") return Family::QFT;
  if (lower == "qftentangled") return Family::QFTEntangled;
  if (lower == "qaoamaxcut" || lower == "qaoa") return Family::QAOAMaxCut;
  throw ValidationError("unknown benchmark family '" + name + "'");
}

inline std::string to_string(Family family) {
  switch (family) {
    case Family::DJ: return "DJ";
    case Family::GHZ: return "GHZ";
    case Family::GraphState: return "GraphState";
    case Family::QFT: return "QFT";
    case Family::QFTEntangled: return "QFTEntangled";
    case Family::QAOAMaxCut: return "QAOAMaxCut";
  }
  throw Error("unknown family");
}

struct BenchSpec {
  Family family = Family::GHZ;
  int n = 2;
  std::uint64_t seed = 1;
  int qaoa_rounds = 2;          // p
  bool complete_graph = false;  // GraphState/QAOAMaxCut: complete instead of near-3-regular
};

namespace detail {

/// Seeded graph on n vertices: a shuffled cycle plus a chord matching.
/// Every vertex has degree 3 for even n >= 4; odd n leaves one vertex at
/// degree 2 (an exact 3-regular graph needs n * 3 even). n = 3 is the
/// triangle.
inline std::vector<std::pair<int, int>> seeded_graph(int n, std::uint64_t seed, bool complete) {
  if (n < 3) throw ValidationError("graph benchmarks need at least 3 qubits");
  std::vector<std::pair<int, int>> edges;
  if (complete) {
    for (int i = 0; i < n; ++i) {
      for (int k = i + 1; k < n; ++k) edges.emplace_back(i, k);
    }
    return edges;
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);

  const auto add = [&](int a, int b) {
    edges.emplace_back(std::min(a, b), std::max(a, b));
  };
  for (int i = 0; i < n; ++i) add(perm[static_cast<std::size_t>(i)],
                                  perm[static_cast<std::size_t>((i + 1) % n)]);
  if (n >= 4) {
    const int half = n / 2;
    for (int i = 0; i + half < n; ++i)
      add(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + half)]);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

inline std::uint64_t dj_oracle_mask(int inputs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(1, (std::uint64_t{1} << inputs) - 1);
  return dist(rng);
}

}  // namespace detail

/// Deterministic benchmark circuits. All families are emitted without final
/// measurements so routed outputs can be checked by the equivalence oracle.
inline Circuit generate(const BenchSpec& spec) {
  if (spec.n < 2) throw ValidationError("benchmarks need at least 2 qubits");
  const int n = spec.n;
  Circuit circuit(n);
  switch (spec.family) {
    case Family::DJ: {
      // balanced oracle f(x) = mask . x as a CNOT fan-in onto the flag qubit
      const int flag = n - 1;
      const std::uint64_t mask = detail::dj_oracle_mask(n - 1, spec.seed);
      circuit.add(Gate::x(flag));
      for (int q = 0; q < n; ++q) circuit.add(Gate::h(q));
      for (int q = 0; q < n - 1; ++q) {
        if (mask & (std::uint64_t{1} << q)) circuit.add(Gate::cx(q, flag));
      }
      for (int q = 0; q < n - 1; ++q) circuit.add(Gate::h(q));
      break;
    }
    case Family::GHZ: {
      circuit.add(Gate::h(0));
      for (int q = 0; q + 1 < n; ++q) circuit.add(Gate::cx(q, q + 1));
      break;
    }
    case Family::GraphState: {
      for (int q = 0; q < n; ++q) circuit.add(Gate::h(q));
      for (const auto& [a, b] : detail::seeded_graph(n, spec.seed, spec.complete_graph))
        circuit.add(Gate::cz(a, b));
      break;
    }
    case Family::QFT:
    case Family::QFTEntangled: {
      if (spec.family == Family::QFTEntangled) {
        circuit.add(Gate::h(0));
        for (int q = 0; q + 1 < n; ++q) circuit.add(Gate::cx(q, q + 1));
      }
      // bit-reversed output convention (no trailing qubit-reversal swaps)
      for (int i = 0; i < n; ++i) {
        circuit.add(Gate::h(i));
        for (int j = i + 1; j < n; ++j) {
          const double theta = M_PI / std::pow(2.0, j - i);
          const Unitary2 phase{1, 0, 0, std::exp(Complex(0, theta))};
          circuit.add(Gate::cu(phase, j, i));
        }
      }
      break;
    }
    case Family::QAOAMaxCut: {
      if (spec.qaoa_rounds < 1) throw ValidationError("QAOA needs at least one round");
      const auto edges = detail::seeded_graph(n, spec.seed, spec.complete_graph);
      std::mt19937_64 rng(spec.seed ^ 0x51ed9ab1u);
      std::uniform_real_distribution<double> angle(0.1, M_PI - 0.1);
      for (int q = 0; q < n; ++q) circuit.add(Gate::h(q));
      for (int round = 0; round < spec.qaoa_rounds; ++round) {
        const double gamma = angle(rng);
        const double beta = angle(rng);
        for (const auto& [a, b] : edges) circuit.add(Gate::rzz(gamma, a, b));
        for (int q = 0; q < n; ++q) circuit.add(Gate::rx(beta, q));
      }
      break;
    }
  }
  return circuit;
}

/// RZZ(theta)(a, b) -> CNOT(a, b); RZ(theta)(b); CNOT(a, b).
inline Circuit lower_rzz(const Circuit& circuit) {
  Circuit out(circuit.num_qubits(), circuit.num_clbits());
  out.set_data_qubits(circuit.data_qubits());
  for (const Gate& g : circuit.gates()) {
    if (g.kind == GateKind::TwoQubit && g.name == "rzz") {
      Gate a = Gate::cx(g.qubits[0], g.qubits[1]);
      Gate rot = Gate::rz(g.params.at(0), g.qubits[1]);
      Gate b = Gate::cx(g.qubits[0], g.qubits[1]);
      a.group = g.group;
      rot.group = g.group;
      b.group = g.group;
      out.add(std::move(a));
      out.add(std::move(rot));
      out.add(std::move(b));
    } else {
      out.add(g);
    }
  }
  return out;
}

}  // namespace rtg::bench
