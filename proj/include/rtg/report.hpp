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

#include <string>

#include <json.hpp>

#include "rtg/rtg.hpp"
#include "rtg/topology.hpp"

namespace rtg {

inline constexpr int kReportFormatVersion = 1;

/// Machine-readable record of one transpile run. Every metric is
/// recomputable from the emitted circuit files; wall_time_ms is the only
/// field that varies between identical invocations.
struct RunReport {
  std::string mode;
  std::string topology;
  Layout layout;
  TimingErrorModel model;
  RtgResult result;
  std::uint64_t base_seed = 0;
  int trials = 0;
  double wall_time_ms = 0.0;
};

namespace detail {

inline nlohmann::ordered_json metrics_json(const CircuitMetrics& m) {
  nlohmann::ordered_json j;
  j["depth"] = m.depth;
  j["temporal_depth"] = m.temporal_depth;
  j["n_cnot"] = m.counts.n_cnot;
  j["n_tele"] = m.counts.n_tele;
  j["n_cnot_data"] = m.counts.n_cnot_data;
  j["n_g"] = m.counts.n_g;
  j["n_measure"] = m.counts.n_measure;
  j["n_reset"] = m.counts.n_reset;
  j["c_2q"] = m.c_2q;
  j["swap_count"] = m.swap_count;
  return j;
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const RunReport& report) {
  nlohmann::ordered_json j;
  j["version"] = kReportFormatVersion;
  j["mode"] = report.mode;
  j["topology"] = report.topology;
  j["layout"] = report.layout.physical;
  j["model"] = {{"t_1q", report.model.t_1q},   {"t_2q", report.model.t_2q},
                {"t_tele", report.model.t_tele}, {"p_2q", report.model.p_2q},
                {"p_tele", report.model.p_tele}};
  j["virtual_edges"] = nlohmann::ordered_json::array();
  for (const VirtualEdge& e : report.result.best.subset) {
    j["virtual_edges"].push_back(
        {{"endpoints", {e.endpoints.a, e.endpoints.b}}, {"aux_path", e.aux_path}});
  }
  j["baseline"] = detail::metrics_json(report.result.report.baseline);
  j["best"] = detail::metrics_json(report.result.report.best_pre_expansion);
  j["expanded"] = detail::metrics_json(report.result.report.expanded);
  j["depth_reduction_percent"] = {
      {"expected", report.result.report.expected_reduction_percent},
      {"impl", report.result.report.impl_reduction_percent}};
  j["seeds"] = {{"base", report.base_seed},
                {"trials", report.trials},
                {"baseline_best", report.result.baseline.best_seed},
                {"best", report.result.best.best_seed}};
  j["wall_time_ms"] = report.wall_time_ms;
  return j;
}

}  // namespace rtg
