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
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "rtg/circuit.hpp"
#include "rtg/metrics.hpp"
#include "rtg/router.hpp"
#include "rtg/teleport.hpp"
#include "rtg/topology.hpp"

namespace rtg {

enum class RtgMode { Plain, NoiseAware };

struct RtgConfig {
  RtgMode mode = RtgMode::Plain;
  int max_subset_size = 3;   // K
  int reuse_limit = 2;       // R: markers allowed per edge in the routed output
  int closeness_radius = 1;
  int max_path_len = 8;
  int trials_per_subset = 5; // T
  std::uint64_t base_seed = 0;
  double weight_depth = 1.0; // w_d
  double weight_error = 1.0; // w_e

  void validate() const {
    if (max_subset_size < 0) throw ValidationError("max_subset_size must be >= 0");
    if (reuse_limit < 1) throw ValidationError("reuse_limit must be >= 1");
    if (trials_per_subset < 1) throw ValidationError("trials_per_subset must be >= 1");
    if (closeness_radius < 0) throw ValidationError("closeness_radius must be >= 0");
    if (max_path_len < 1) throw ValidationError("max_path_len must be >= 1");
  }
};

struct SubsetEvaluation {
  std::vector<VirtualEdge> subset;
  double d_t = 0.0;   // min temporal depth over the seed trials
  double c_2q = 0.0;  // error cost of the best trial
  std::uint64_t best_seed = 0;
  RoutedCircuit routed;
};

struct CircuitMetrics {
  int depth = 0;
  double temporal_depth = 0.0;
  GateCounts counts;
  double c_2q = 0.0;
  int swap_count = 0;
};

struct RtgReport {
  CircuitMetrics baseline;
  CircuitMetrics best_pre_expansion;
  CircuitMetrics expanded;
  double expected_reduction_percent = 0.0;  // pre-expansion depth vs baseline
  double impl_reduction_percent = 0.0;      // expanded depth vs baseline
};

struct RtgResult {
  SubsetEvaluation baseline;
  SubsetEvaluation best;
  Circuit expanded;
  RtgReport report;
};

/// Cumulative two-qubit failure probability
/// 1 - (1 - p_2q)^n_g * (1 - p_tele)^n_tele.
inline double error_cost(const GateCounts& counts, const TimingErrorModel& model) {
  model.validate();
  return 1.0 - std::pow(1.0 - model.p_2q, counts.n_g) *
                   std::pow(1.0 - model.p_tele, counts.n_tele);
}

/// Physical qubit pairs (with multiplicity) that two-qubit gates need but
/// the native map does not provide under the initial layout.
inline std::map<QubitPair, int> required_pairs(const Circuit& circuit, const Layout& layout,
                                               const CouplingMap& map) {
  layout.validate(map.num_physical());
  std::map<QubitPair, int> required;
  for (const Gate& g : circuit.gates()) {
    if (!g.is_two_qubit_class()) continue;
    const QubitPair pair(layout.at(g.qubits[0]), layout.at(g.qubits[1]));
    if (!map.adjacent(pair.a, pair.b)) required[pair] += 1;
  }
  return required;
}

/// Keeps candidates that are directly required or whose endpoints both lie
/// within closeness_radius of a required pair's endpoints, then drops
/// candidates whose required multiplicity exceeds the reuse limit.
inline std::vector<VirtualEdge> filter_candidates(const std::vector<VirtualEdge>& candidates,
                                                  const std::map<QubitPair, int>& required,
                                                  const RtgConfig& config,
                                                  const CouplingMap& map) {
  std::vector<VirtualEdge> kept;
  std::map<int, std::vector<int>> dist_cache;  // full-map native distances by source
  const auto dist = [&](int from, int to) {
    auto it = dist_cache.find(from);
    if (it == dist_cache.end()) it = dist_cache.emplace(from, map.distances_from(from)).first;
    const int d = it->second[static_cast<std::size_t>(to)];
    return d < 0 ? std::numeric_limits<int>::max() : d;
  };

  for (const VirtualEdge& cand : candidates) {
    const int u = cand.endpoints.a;
    const int v = cand.endpoints.b;
    bool keep = required.count(cand.endpoints) > 0;
    for (auto it = required.begin(); !keep && it != required.end(); ++it) {
      const int p = it->first.a;
      const int q = it->first.b;
      const int r = config.closeness_radius;
      keep = (dist(u, p) <= r && dist(v, q) <= r) || (dist(u, q) <= r && dist(v, p) <= r);
    }
    if (!keep) continue;
    const auto it = required.find(cand.endpoints);
    if (it != required.end() && it->second > config.reuse_limit) continue;
    kept.push_back(cand);
  }
  return kept;
}

/// All qubit-disjoint subsets of size 0..K, smallest size first and
/// lexicographic by candidate index within each size.
inline std::vector<std::vector<VirtualEdge>> enumerate_subsets(
    const std::vector<VirtualEdge>& filtered, int max_subset_size) {
  std::vector<std::set<int>> qubits_of(filtered.size());
  for (std::size_t i = 0; i < filtered.size(); ++i) {
    qubits_of[i].insert(filtered[i].endpoints.a);
    qubits_of[i].insert(filtered[i].endpoints.b);
    qubits_of[i].insert(filtered[i].aux_path.begin(), filtered[i].aux_path.end());
  }
  const auto disjoint = [&](std::size_t a, std::size_t b) {
    for (int q : qubits_of[a]) {
      if (qubits_of[b].count(q)) return false;
    }
    return true;
  };

  std::vector<std::vector<VirtualEdge>> subsets{{}};
  std::vector<std::vector<int>> current{{}};
  for (int size = 1; size <= max_subset_size; ++size) {
    std::vector<std::vector<int>> grown;
    for (const std::vector<int>& base : current) {
      const int start = base.empty() ? 0 : base.back() + 1;
      for (int i = start; i < static_cast<int>(filtered.size()); ++i) {
        bool ok = true;
        for (int b : base) {
          if (!disjoint(static_cast<std::size_t>(b), static_cast<std::size_t>(i))) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        std::vector<int> next = base;
        next.push_back(i);
        grown.push_back(next);
      }
    }
    for (const std::vector<int>& indices : grown) {
      std::vector<VirtualEdge> subset;
      for (int i : indices) subset.push_back(filtered[static_cast<std::size_t>(i)]);
      subsets.push_back(std::move(subset));
    }
    current = std::move(grown);
    if (current.empty()) break;
  }
  return subsets;
}

/// Deterministic per-trial routing seed (splitmix64 over base_seed, trial).
inline std::uint64_t trial_seed(std::uint64_t base_seed, int trial) {
  std::uint64_t z = base_seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace detail {

/// Evaluates one subset with T seeded routing trials; trials whose per-edge
/// marker count exceeds the reuse limit are rejected. Returns nothing when
/// every trial is rejected.
inline std::optional<SubsetEvaluation> try_evaluate_subset(
    const Circuit& circuit, const CouplingMap& map, const Layout& layout,
    const std::vector<VirtualEdge>& subset, const TimingErrorModel& model,
    const RtgConfig& config) {
  const CouplingMap extended = extend_with_virtual(map, subset);
  std::optional<SubsetEvaluation> best;
  for (int trial = 0; trial < config.trials_per_subset; ++trial) {
    RouterParams params;
    params.seed = trial_seed(config.base_seed, trial);
    RoutedCircuit routed = route(circuit, extended, layout, params);

    bool within_reuse = true;
    for (const auto& [pair, uses] : routed.virtual_uses) {
      if (uses > config.reuse_limit) {
        within_reuse = false;
        break;
      }
    }
    if (!within_reuse) continue;

    const Circuit lowered = lower_swaps(routed.circuit);
    const double d_t = temporal_depth(lowered, model);
    if (!best || d_t < best->d_t) {
      SubsetEvaluation eval;
      eval.subset = subset;
      eval.d_t = d_t;
      eval.c_2q = error_cost(gate_counts(lowered, routed.circuit.data_qubits()), model);
      eval.best_seed = params.seed;
      eval.routed = std::move(routed);
      best = std::move(eval);
    }
  }
  return best;
}

}  // namespace detail

inline SubsetEvaluation evaluate_subset(const Circuit& circuit, const CouplingMap& map,
                                        const Layout& layout,
                                        const std::vector<VirtualEdge>& subset,
                                        const TimingErrorModel& model, const RtgConfig& config) {
  config.validate();
  model.validate();
  auto eval = detail::try_evaluate_subset(circuit, map, layout, subset, model, config);
  if (!eval)
    throw Error("no routing trial stayed within the reuse limit for this subset");
  return *std::move(eval);
}

namespace detail {

inline double safe_ratio(double value, double reference) {
  if (reference > 0) return value / reference;
  return value <= 0 ? 0.0 : std::numeric_limits<double>::infinity();
}

inline CircuitMetrics measure_circuit(const Circuit& circuit, const std::vector<int>& data,
                                      const TimingErrorModel& model, int swap_count) {
  CircuitMetrics m;
  const Circuit lowered = lower_swaps(circuit);
  m.depth = depth(lowered);
  m.temporal_depth = temporal_depth(lowered, model);
  m.counts = gate_counts(lowered, data);
  m.c_2q = error_cost(m.counts, model);
  m.swap_count = swap_count;
  return m;
}

}  // namespace detail

/// The full search: baseline evaluation, candidate enumeration and
/// filtering, disjoint-subset enumeration, seeded per-subset evaluation,
/// mode-dependent selection, and teleport expansion. The empty subset is
/// always a candidate, so the result never regresses below the baseline.
inline RtgResult rtg_search(const Circuit& circuit, const CouplingMap& map, const Layout& layout,
                            const TimingErrorModel& model, const RtgConfig& config) {
  config.validate();
  model.validate();
  if (!map.virtual_edges().empty())
    throw ValidationError("rtg_search expects a map without pre-set virtual edges");

  RtgResult result;
  result.baseline = evaluate_subset(circuit, map, layout, {}, model, config);

  const std::vector<VirtualEdge> candidates =
      enumerate_virtual_edges(map, layout, config.max_path_len);
  const std::map<QubitPair, int> required = required_pairs(circuit, layout, map);
  const std::vector<VirtualEdge> filtered = filter_candidates(candidates, required, config, map);
  const std::vector<std::vector<VirtualEdge>> subsets =
      enumerate_subsets(filtered, config.max_subset_size);

  const double base_d = result.baseline.d_t;
  const double base_c = result.baseline.c_2q;

  SubsetEvaluation best = result.baseline;
  double best_objective = config.weight_depth + config.weight_error;  // empty subset's score
  for (const std::vector<VirtualEdge>& subset : subsets) {
    if (subset.empty()) continue;
    auto eval = detail::try_evaluate_subset(circuit, map, layout, subset, model, config);
    if (!eval) continue;
    if (config.mode == RtgMode::Plain) {
      const bool better =
          eval->d_t < best.d_t ||
          (eval->d_t == best.d_t &&
           (eval->c_2q < best.c_2q ||
            (eval->c_2q == best.c_2q && eval->subset.size() < best.subset.size())));
      if (better) best = *std::move(eval);
    } else {
      if (eval->d_t > base_d || eval->c_2q > base_c) continue;  // infeasible
      const double objective = config.weight_depth * detail::safe_ratio(eval->d_t, base_d) +
                               config.weight_error * detail::safe_ratio(eval->c_2q, base_c);
      const bool better = objective < best_objective ||
                          (objective == best_objective &&
                           eval->subset.size() < best.subset.size());
      if (better) {
        best_objective = objective;
        best = *std::move(eval);
      }
    }
  }
  result.best = std::move(best);

  const CouplingMap extended = extend_with_virtual(map, result.best.subset);
  result.expanded = expand_teleportations(result.best.routed, extended);

  const std::vector<int>& data = result.baseline.routed.circuit.data_qubits();
  result.report.baseline =
      detail::measure_circuit(result.baseline.routed.circuit, data, model,
                              result.baseline.routed.swap_count);
  result.report.best_pre_expansion = detail::measure_circuit(
      result.best.routed.circuit, data, model, result.best.routed.swap_count);
  result.report.expanded =
      detail::measure_circuit(result.expanded, data, model, result.best.routed.swap_count);
  if (result.report.baseline.depth > 0) {
    result.report.expected_reduction_percent =
        100.0 * (1.0 - static_cast<double>(result.report.best_pre_expansion.depth) /
                           result.report.baseline.depth);
    result.report.impl_reduction_percent =
        100.0 * (1.0 - static_cast<double>(result.report.expanded.depth) /
                           result.report.baseline.depth);
  }
  return result;
}

}  // namespace rtg
