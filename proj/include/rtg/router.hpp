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
#include <deque>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "rtg/circuit.hpp"
#include "rtg/dag.hpp"
#include "rtg/topology.hpp"

namespace rtg {

/// SABRE-style heuristic knobs. Routing is deterministic given a seed.
struct RouterParams {
  int extended_set_size = 20;
  double extended_weight = 0.5;
  double decay_increment = 0.001;
  int decay_reset_interval = 5;
  std::uint64_t seed = 0;
};

struct RoutedCircuit {
  Circuit circuit;  // physical indices; markers on virtual edges, SWAPs native
  Layout final_layout;
  int swap_count = 0;
  std::map<QubitPair, int> virtual_uses;
};

struct RoutingReport {
  bool pass = true;
  std::vector<std::string> violations;
};

namespace detail {

/// Routing state over the data region: layout bookkeeping plus native
/// distances restricted to the data-induced subgraph. Virtual pairs have
/// distance 1; everything else follows native edges between data qubits.
class RoutingContext {
 public:
  RoutingContext(const CouplingMap& map, const Layout& initial, int num_logical)
      : map_(map), phys_of_(initial.physical) {
    if (num_logical > initial.size())
      throw ValidationError("layout smaller than the circuit's qubit count");
    initial.validate(map.num_physical());
    data_ = initial.data_set();
    is_data_.assign(static_cast<std::size_t>(map.num_physical()), false);
    for (int q : data_) is_data_[static_cast<std::size_t>(q)] = true;

    dist_.assign(data_.size(), std::vector<int>(data_.size(), -1));
    for (std::size_t i = 0; i < data_.size(); ++i) {
      index_of_[data_[i]] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
      bfs_from(static_cast<int>(i));
      for (std::size_t k = 0; k < data_.size(); ++k) {
        if (dist_[i][k] < 0)
          throw Error("routing infeasible: data region disconnected between physical qubits " +
                      std::to_string(data_[i]) + " and " + std::to_string(data_[k]));
      }
    }
    for (const QubitPair& e : map.native_edges()) {
      if (is_data_[static_cast<std::size_t>(e.a)] && is_data_[static_cast<std::size_t>(e.b)])
        data_edges_.push_back(e);
    }
    log_of_.assign(static_cast<std::size_t>(map.num_physical()), -1);
    for (std::size_t l = 0; l < phys_of_.size(); ++l)
      log_of_[static_cast<std::size_t>(phys_of_[l])] = static_cast<int>(l);
  }

  int phys(int logical) const { return phys_of_[static_cast<std::size_t>(logical)]; }
  const std::vector<int>& phys_of() const { return phys_of_; }
  const std::vector<QubitPair>& data_edges() const { return data_edges_; }
  const CouplingMap& map() const { return map_; }

  int native_distance(int pu, int pv) const {
    return dist_[static_cast<std::size_t>(index_of_.at(pu))]
                [static_cast<std::size_t>(index_of_.at(pv))];
  }

  /// Heuristic distance: 1 for virtual pairs, else native within the region.
  int distance(int pu, int pv) const {
    if (map_.virtual_edge_index(pu, pv) >= 0) return 1;
    return native_distance(pu, pv);
  }

  bool executable(int pu, int pv) const {
    return map_.adjacent(pu, pv) || map_.virtual_edge_index(pu, pv) >= 0;
  }

  void apply_swap(const QubitPair& e) {
    const int la = log_of_[static_cast<std::size_t>(e.a)];
    const int lb = log_of_[static_cast<std::size_t>(e.b)];
    if (la >= 0) phys_of_[static_cast<std::size_t>(la)] = e.b;
    if (lb >= 0) phys_of_[static_cast<std::size_t>(lb)] = e.a;
    std::swap(log_of_[static_cast<std::size_t>(e.a)], log_of_[static_cast<std::size_t>(e.b)]);
  }

  /// First hop of a shortest native path from pu toward pv inside the data
  /// region, smallest-index tie-break.
  int step_toward(int pu, int pv) const {
    const int du = native_distance(pu, pv);
    for (int nb : map_.neighbors(pu)) {
      if (!is_data_[static_cast<std::size_t>(nb)]) continue;
      if (native_distance(nb, pv) == du - 1) return nb;
    }
    throw Error("no native step between physical qubits " + std::to_string(pu) + " and " +
                std::to_string(pv));
  }

 private:
  void bfs_from(int source_index) {
    std::deque<int> queue{data_[static_cast<std::size_t>(source_index)]};
    auto& row = dist_[static_cast<std::size_t>(source_index)];
    row[static_cast<std::size_t>(source_index)] = 0;
    while (!queue.empty()) {
      const int cur = queue.front();
      queue.pop_front();
      const int dcur = row[static_cast<std::size_t>(index_of_.at(cur))];
      for (int nb : map_.neighbors(cur)) {
        if (!is_data_[static_cast<std::size_t>(nb)]) continue;
        auto& slot = row[static_cast<std::size_t>(index_of_.at(nb))];
        if (slot < 0) {
          slot = dcur + 1;
          queue.push_back(nb);
        }
      }
    }
  }

  const CouplingMap& map_;
  std::vector<int> phys_of_;
  std::vector<int> log_of_;
  std::vector<int> data_;
  std::vector<bool> is_data_;
  std::map<int, int> index_of_;
  std::vector<std::vector<int>> dist_;
  std::vector<QubitPair> data_edges_;
};

}  // namespace detail

/// Routes a logical circuit onto the coupling map. Two-qubit gates landing
/// on virtual-edge pairs become VirtualTwoQubit markers; everything else is
/// made native-adjacent with SWAPs restricted to native edges between data
/// qubits. Decay plus a forced-escape path bound the number of SWAPs
/// between successive gate executions, so routing always terminates.
inline RoutedCircuit route(const Circuit& circuit, const CouplingMap& map, const Layout& initial,
                           const RouterParams& params) {
  circuit.validate();
  detail::RoutingContext ctx(map, initial, circuit.num_qubits());
  const Dag dag = build_dag(circuit);

  RoutedCircuit result;
  result.circuit = Circuit(map.num_physical(), circuit.num_clbits());
  result.circuit.set_data_qubits(initial.data_set());

  std::vector<int> pending(dag.num_nodes, 0);
  for (std::size_t i = 0; i < dag.num_nodes; ++i)
    pending[i] = static_cast<int>(dag.predecessors[i].size());
  std::vector<bool> done(dag.num_nodes, false);
  std::vector<int> ready;
  for (std::size_t i = 0; i < dag.num_nodes; ++i) {
    if (pending[i] == 0) ready.push_back(static_cast<int>(i));
  }

  std::mt19937_64 rng(params.seed);
  std::vector<double> decay(static_cast<std::size_t>(map.num_physical()), 1.0);
  int swaps_since_reset = 0;
  int swaps_without_progress = 0;
  const int escape_threshold = 2 * static_cast<int>(initial.physical.size()) + 8;

  const auto emit_mapped = [&](int gi) {
    const Gate& g = circuit.gate(static_cast<std::size_t>(gi));
    Gate mapped = g;
    for (int& q : mapped.qubits) q = ctx.phys(q);
    if (mapped.kind == GateKind::TwoQubit &&
        ctx.map().virtual_edge_index(mapped.qubits[0], mapped.qubits[1]) >= 0) {
      const int edge = ctx.map().virtual_edge_index(mapped.qubits[0], mapped.qubits[1]);
      mapped = Gate::virtual_two_qubit(mapped, edge);
      result.virtual_uses[QubitPair(mapped.qubits[0], mapped.qubits[1])] += 1;
    }
    result.circuit.add(std::move(mapped));
    done[static_cast<std::size_t>(gi)] = true;
    for (int succ : dag.successors[static_cast<std::size_t>(gi)]) {
      if (--pending[static_cast<std::size_t>(succ)] == 0) ready.push_back(succ);
    }
  };

  const auto is_executable = [&](int gi) {
    const Gate& g = circuit.gate(static_cast<std::size_t>(gi));
    if (!g.is_two_qubit_class()) return true;
    return ctx.executable(ctx.phys(g.qubits[0]), ctx.phys(g.qubits[1]));
  };

  const auto emit_swap = [&](const QubitPair& e) {
    result.circuit.add(Gate::swap(e.a, e.b));
    ctx.apply_swap(e);
    ++result.swap_count;
    decay[static_cast<std::size_t>(e.a)] += params.decay_increment;
    decay[static_cast<std::size_t>(e.b)] += params.decay_increment;
    if (++swaps_since_reset >= params.decay_reset_interval) {
      std::fill(decay.begin(), decay.end(), 1.0);
      swaps_since_reset = 0;
    }
  };

  while (!ready.empty()) {
    // execute every gate that is already executable, to a fixpoint
    bool progress = true;
    bool any_progress = false;
    while (progress) {
      progress = false;
      std::sort(ready.begin(), ready.end());
      std::vector<int> current = std::move(ready);
      ready.clear();
      std::vector<int> blocked;
      for (int gi : current) {
        if (is_executable(gi)) {
          emit_mapped(gi);  // may append newly enabled gates to `ready`
          progress = true;
          any_progress = true;
        } else {
          blocked.push_back(gi);
        }
      }
      ready.insert(ready.end(), blocked.begin(), blocked.end());
    }
    if (any_progress) {
      std::fill(decay.begin(), decay.end(), 1.0);
      swaps_since_reset = 0;
      swaps_without_progress = 0;
    }
    if (ready.empty()) break;

    // Front layer is entirely blocked two-qubit gates; pick a SWAP.
    std::sort(ready.begin(), ready.end());
    std::vector<std::pair<int, int>> front_pairs;
    for (int gi : ready) {
      const Gate& g = circuit.gate(static_cast<std::size_t>(gi));
      front_pairs.emplace_back(ctx.phys(g.qubits[0]), ctx.phys(g.qubits[1]));
    }

    if (swaps_without_progress > escape_threshold) {
      // forced escape: walk the closest front gate together along a shortest path
      int best_gate = 0;
      int best_dist = std::numeric_limits<int>::max();
      for (std::size_t i = 0; i < front_pairs.size(); ++i) {
        const int d = ctx.distance(front_pairs[i].first, front_pairs[i].second);
        if (d < best_dist) {
          best_dist = d;
          best_gate = static_cast<int>(i);
        }
      }
      auto [pu, pv] = front_pairs[static_cast<std::size_t>(best_gate)];
      while (!ctx.executable(pu, pv)) {
        const int nb = ctx.step_toward(pu, pv);
        emit_swap(QubitPair(pu, nb));
        pu = nb;
      }
      swaps_without_progress = 0;
      continue;
    }

    // extended set: the next two-qubit gates beyond the front, program order
    std::vector<std::pair<int, int>> extended;
    for (std::size_t i = 0; i < circuit.size() && static_cast<int>(extended.size()) <
                                                      params.extended_set_size; ++i) {
      if (done[i]) continue;
      if (std::find(ready.begin(), ready.end(), static_cast<int>(i)) != ready.end()) continue;
      const Gate& g = circuit.gate(i);
      if (!g.is_two_qubit_class()) continue;
      extended.emplace_back(ctx.phys(g.qubits[0]), ctx.phys(g.qubits[1]));
    }

    std::vector<QubitPair> candidates;
    for (const QubitPair& e : ctx.data_edges()) {
      for (const auto& [pu, pv] : front_pairs) {
        if (e.contains(pu) || e.contains(pv)) {
          candidates.push_back(e);
          break;
        }
      }
    }
    if (candidates.empty()) candidates = ctx.data_edges();

    const auto swapped = [](int q, const QubitPair& e) {
      if (q == e.a) return e.b;
      if (q == e.b) return e.a;
      return q;
    };
    double best_score = std::numeric_limits<double>::infinity();
    std::vector<QubitPair> best;
    for (const QubitPair& e : candidates) {
      double front_term = 0;
      for (const auto& [pu, pv] : front_pairs)
        front_term += ctx.distance(swapped(pu, e), swapped(pv, e));
      front_term /= static_cast<double>(front_pairs.size());
      double ext_term = 0;
      if (!extended.empty()) {
        for (const auto& [pu, pv] : extended)
          ext_term += ctx.distance(swapped(pu, e), swapped(pv, e));
        ext_term /= static_cast<double>(extended.size());
      }
      const double score = std::max(decay[static_cast<std::size_t>(e.a)],
                                    decay[static_cast<std::size_t>(e.b)]) *
                           (front_term + params.extended_weight * ext_term);
      if (score < best_score - 1e-12) {
        best_score = score;
        best = {e};
      } else if (score <= best_score + 1e-12) {
        best.push_back(e);
      }
    }
    QubitPair chosen = best.front();
    if (best.size() > 1) {
      std::uniform_int_distribution<std::size_t> pick(0, best.size() - 1);
      chosen = best[pick(rng)];
    }
    emit_swap(chosen);
    ++swaps_without_progress;
  }

  result.final_layout = Layout(ctx.phys_of());
  return result;
}

/// Checks RoutedCircuit invariants: two-qubit gates on native edges or
/// marked virtual pairs, SWAPs on native edges only, markers consistent
/// with the map's virtual-edge table.
inline RoutingReport validate_routing(const RoutedCircuit& routed, const CouplingMap& map) {
  RoutingReport report;
  const auto fail = [&](std::size_t index, const std::string& why) {
    report.pass = false;
    report.violations.push_back("gate " + std::to_string(index) + ": " + why);
  };
  for (std::size_t i = 0; i < routed.circuit.size(); ++i) {
    const Gate& g = routed.circuit.gate(i);
    if (g.kind == GateKind::TwoQubit) {
      if (g.name == "swap") {
        if (!map.adjacent(g.qubits[0], g.qubits[1]))
          fail(i, "SWAP on non-native pair (" + std::to_string(g.qubits[0]) + ", " +
                      std::to_string(g.qubits[1]) + ")");
      } else if (!map.adjacent(g.qubits[0], g.qubits[1])) {
        fail(i, "two-qubit gate '" + g.name + "' on non-adjacent pair (" +
                    std::to_string(g.qubits[0]) + ", " + std::to_string(g.qubits[1]) + ")");
      }
    } else if (g.kind == GateKind::VirtualTwoQubit) {
      const int idx = map.virtual_edge_index(g.qubits[0], g.qubits[1]);
      if (idx < 0) {
        fail(i, "virtual marker on pair without a virtual edge");
      } else if (idx != g.edge) {
        fail(i, "virtual marker references edge " + std::to_string(g.edge) +
                    " but the pair belongs to edge " + std::to_string(idx));
      }
    }
  }
  return report;
}

}  // namespace rtg
