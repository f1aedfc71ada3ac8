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

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rtg/bench.hpp"
#include "rtg/eagle127.hpp"
#include "rtg/qasm.hpp"
#include "rtg/report.hpp"
#include "rtg/rtg.hpp"
#include "rtg/serialize.hpp"
#include "rtg/verify.hpp"

namespace {

namespace fs = std::filesystem;

rtg::CouplingMap load_topology(const std::string& spec) {
  if (spec == "eagle127") return rtg::heavy_hex_eagle();
  if (spec.rfind("line:", 0) == 0) {
    const int n = std::stoi(spec.substr(5));
    return rtg::line_map(n);
  }
  if (spec.rfind("file:", 0) == 0) return rtg::read_topology_file(spec.substr(5));
  throw rtg::Error("unknown topology '" + spec + "' (expected eagle127, line:N or file:PATH)");
}

rtg::Layout load_layout(const std::string& spec, int num_logical, const rtg::CouplingMap& map) {
  if (spec == "identity") {
    std::vector<int> phys(static_cast<std::size_t>(num_logical));
    for (int i = 0; i < num_logical; ++i) phys[static_cast<std::size_t>(i)] = i;
    return rtg::Layout(std::move(phys));
  }
  if (spec.rfind("line:", 0) == 0) {
    const std::string range = spec.substr(5);
    const auto dash = range.find('-');
    if (dash == std::string::npos) throw rtg::Error("layout line:A-B requires a range");
    const int first = std::stoi(range.substr(0, dash));
    const int last = std::stoi(range.substr(dash + 1));
    if (last - first + 1 < num_logical)
      throw rtg::Error("layout line:" + range + " is shorter than the circuit (" +
                       std::to_string(num_logical) + " qubits)");
    std::vector<int> phys(static_cast<std::size_t>(num_logical));
    for (int i = 0; i < num_logical; ++i) phys[static_cast<std::size_t>(i)] = first + i;
    return rtg::Layout(std::move(phys));
  }
  if (spec.rfind("file:", 0) == 0) {
    std::ifstream in(spec.substr(5));
    if (!in) throw rtg::Error("cannot open layout file '" + spec.substr(5) + "'");
    nlohmann::json j;
    in >> j;
    rtg::Layout layout(j.at("layout").get<std::vector<int>>());
    layout.validate(map.num_physical());
    if (layout.size() < num_logical)
      throw rtg::Error("layout file holds fewer qubits than the circuit needs");
    return layout;
  }
  throw rtg::Error("unknown layout '" + spec + "' (expected identity, line:A-B or file:PATH)");
}

rtg::bench::BenchSpec parse_bench(const std::string& text, int rounds, bool complete) {
  rtg::bench::BenchSpec spec;
  spec.qaoa_rounds = rounds;
  spec.complete_graph = complete;
  const auto first = text.find(':');
  if (first == std::string::npos) throw rtg::Error("bench spec must look like FAMILY:N[:SEED]");
  spec.family = rtg::bench::family_from_string(text.substr(0, first));
  const auto second = text.find(':', first + 1);
  if (second == std::string::npos) {
    spec.n = std::stoi(text.substr(first + 1));
  } else {
    spec.n = std::stoi(text.substr(first + 1, second - first - 1));
    spec.seed = std::stoull(text.substr(second + 1));
  }
  return spec;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw rtg::Error("cannot open '" + path.string() + "' for writing");
  out << text;
}

int cmd_transpile(const std::string& circuit_file, const std::string& bench_spec,
                  const std::string& topology_spec, const std::string& layout_spec,
                  const std::string& mode, double t2q, double tele_time_factor, double p2q,
                  double tele_error_factor, int trials, int max_subset, int reuse_limit,
                  int max_path_len, std::uint64_t seed, int rounds, bool complete,
                  const std::string& out_dir, const std::string& format) {
  const auto start = std::chrono::steady_clock::now();

  rtg::Circuit circuit;
  if (!circuit_file.empty()) {
    circuit = rtg::read_circuit_file(circuit_file);
  } else if (!bench_spec.empty()) {
    circuit = rtg::bench::generate(parse_bench(bench_spec, rounds, complete));
  } else {
    throw rtg::Error("provide --circuit FILE or --bench FAMILY:N[:SEED]");
  }

  const rtg::CouplingMap map = load_topology(topology_spec);
  const rtg::Layout layout = load_layout(layout_spec, circuit.num_qubits(), map);

  rtg::TimingErrorModel model;
  model.t_2q = t2q;
  model.t_1q = 0.1 * t2q;
  model.t_tele = tele_time_factor * t2q;
  model.p_2q = p2q;
  model.p_tele = tele_error_factor * p2q;

  rtg::RtgConfig config;
  config.trials_per_subset = trials;
  config.reuse_limit = reuse_limit;
  config.max_path_len = max_path_len;
  config.base_seed = seed;
  if (mode == "baseline") {
    config.mode = rtg::RtgMode::Plain;
    config.max_subset_size = 0;
  } else if (mode == "rtg") {
    config.mode = rtg::RtgMode::Plain;
    config.max_subset_size = max_subset;
  } else if (mode == "rtg-noise") {
    config.mode = rtg::RtgMode::NoiseAware;
    config.max_subset_size = max_subset;
  } else {
    throw rtg::Error("unknown mode '" + mode + "' (expected baseline, rtg or rtg-noise)");
  }

  rtg::RunReport report;
  report.result = rtg::rtg_search(circuit, map, layout, model, config);
  report.mode = mode;
  report.topology = map.name().empty() ? topology_spec : map.name();
  report.layout = layout;
  report.model = model;
  report.base_seed = seed;
  report.trials = trials;

  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  rtg::write_circuit_file(circuit, (dir / "input.json").string());
  rtg::write_circuit_file(report.result.best.routed.circuit, (dir / "routed.json").string());
  rtg::write_circuit_file(report.result.expanded, (dir / "expanded.json").string());

  nlohmann::ordered_json layouts;
  layouts["initial"] = layout.physical;
  layouts["final"] = report.result.best.routed.final_layout.physical;
  write_text(dir / "layouts.json", layouts.dump(2) + "\n");

  if (format == "qasm2") {
    const rtg::Circuit routed_static = rtg::lower_swaps(report.result.best.routed.circuit);
    write_text(dir / "routed.qasm", rtg::qasm::export_qasm2(rtg::bench::lower_rzz(routed_static)));
    write_text(dir / "expanded.qasm",
               rtg::qasm::export_qasm2(rtg::bench::lower_rzz(report.result.expanded)));
  } else if (format != "native") {
    throw rtg::Error("unknown format '" + format + "' (expected native or qasm2)");
  }

  const auto end = std::chrono::steady_clock::now();
  report.wall_time_ms = std::chrono::duration<double, std::milli>(end - start).count();
  const nlohmann::ordered_json j = rtg::to_json(report);
  write_text(dir / "report.json", j.dump(2) + "\n");

  std::cout << "mode=" << mode << " depth " << report.result.report.baseline.depth << " -> "
            << report.result.report.expanded.depth << " (expected "
            << report.result.report.best_pre_expansion.depth << "), temporal depth "
            << report.result.report.baseline.temporal_depth << " -> "
            << report.result.best.d_t << ", teleports "
            << report.result.report.expanded.counts.n_tele << ", report " << (dir / "report.json")
            << "\n";
  return 0;
}

int cmd_verify(const std::string& original_file, const std::string& final_file,
               const std::string& layouts_file, int trials, double tol) {
  const rtg::Circuit original = rtg::read_circuit_file(original_file);
  const rtg::Circuit final_circuit = rtg::read_circuit_file(final_file);
  std::ifstream in(layouts_file);
  if (!in) throw rtg::Error("cannot open layouts file '" + layouts_file + "'");
  nlohmann::json j;
  in >> j;
  const rtg::Layout initial(j.at("initial").get<std::vector<int>>());
  const rtg::Layout final_layout(j.at("final").get<std::vector<int>>());

  const rtg::sim::VerifyReport report = rtg::sim::verify_routed_equivalence(
      original, final_circuit, initial, final_layout, trials, tol);
  std::cout << (report.pass ? "PASS" : "FAIL") << ": " << report.branches_checked
            << " branches over " << report.trials << " trials, max infidelity "
            << report.max_infidelity << "\n";
  if (!report.pass && !report.detail.empty()) std::cout << report.detail << "\n";
  return report.pass ? 0 : 1;
}

int cmd_bench(const std::string& family, int n, std::uint64_t seed, int rounds, bool complete,
              const std::string& out_file, const std::string& format) {
  rtg::bench::BenchSpec spec;
  spec.family = rtg::bench::family_from_string(family);
  spec.n = n;
  spec.seed = seed;
  spec.qaoa_rounds = rounds;
  spec.complete_graph = complete;
  const rtg::Circuit circuit = rtg::bench::generate(spec);
  if (format == "qasm2") {
    write_text(out_file, rtg::qasm::export_qasm2(rtg::bench::lower_rzz(circuit)));
  } else {
    rtg::write_circuit_file(circuit, out_file);
  }
  std::cout << "wrote " << rtg::bench::to_string(spec.family) << "(" << n << ") to " << out_file
            << "\n";
  return 0;
}

int cmd_topology(const std::string& topology_spec, const std::string& out_file) {
  const rtg::CouplingMap map = load_topology(topology_spec);
  rtg::write_topology_file(map, out_file);
  std::cout << "wrote " << map.num_physical() << "-qubit topology ("
            << map.native_edges().size() << " edges) to " << out_file << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Qubit routing with teleported gates"};
  app.require_subcommand(1);

  // transpile
  auto* transpile = app.add_subcommand("transpile", "Route a circuit, optionally with teleported gates");
  std::string circuit_file, bench_spec;
  std::string topology_spec = "eagle127";
  std::string layout_spec = "line:18-32";
  std::string mode = "rtg";
  double t2q = 1.0, tele_time_factor = 3.0, p2q = 0.01, tele_error_factor = 10.0;
  int trials = 5, max_subset = 3, reuse_limit = 2, max_path_len = 8, rounds = 2;
  std::uint64_t seed = 0;
  bool complete = false;
  std::string out_dir = "rtg-out";
  std::string format = "native";
  transpile->add_option("--circuit", circuit_file, "Input circuit file (native format)");
  transpile->add_option("--bench", bench_spec, "Generate a benchmark: FAMILY:N[:SEED]");
  transpile->add_option("--topology", topology_spec, "eagle127 | line:N | file:PATH");
  transpile->add_option("--layout", layout_spec,
                        "identity | line:A-B (first circuit-size qubits) | file:PATH");
  transpile->add_option("--mode", mode, "baseline | rtg | rtg-noise");
  transpile->add_option("--t2q", t2q, "Native two-qubit layer time (t_1q = 0.1 * t2q)");
  transpile->add_option("--tele-time-factor", tele_time_factor, "t_tele = factor * t2q");
  transpile->add_option("--p2q", p2q, "Native two-qubit error probability");
  transpile->add_option("--tele-error-factor", tele_error_factor, "p_tele = factor * p2q");
  transpile->add_option("--seeds", trials, "Routing trials per subset");
  transpile->add_option("--seed", seed, "Base seed for the trial sequence");
  transpile->add_option("--max-subset", max_subset, "Max virtual edges per subset (K)");
  transpile->add_option("--reuse-limit", reuse_limit, "Max uses of one virtual edge (R)");
  transpile->add_option("--max-path-len", max_path_len, "Max auxiliary path length (N)");
  transpile->add_option("--rounds", rounds, "QAOA rounds when generating benchmarks");
  transpile->add_flag("--complete", complete, "Complete graph for graph benchmarks");
  transpile->add_option("--out", out_dir, "Output directory");
  transpile->add_option("--format", format, "native | qasm2 (extra exports)");

  // verify
  auto* verify = app.add_subcommand("verify", "Check a routed/expanded circuit against the original");
  std::string original_file, final_file, layouts_file;
  int verify_trials = 20;
  double tol = 1e-6;
  verify->add_option("--original", original_file, "Original logical circuit")->required();
  verify->add_option("--final", final_file, "Routed or expanded circuit")->required();
  verify->add_option("--layouts", layouts_file, "JSON with initial/final layouts")->required();
  verify->add_option("--trials", verify_trials, "Random input states");
  verify->add_option("--tol", tol, "Fidelity tolerance");

  // bench
  auto* bench = app.add_subcommand("bench", "Emit a benchmark circuit file");
  std::string family = "GHZ";
  int bench_n = 4;
  std::uint64_t bench_seed = 1;
  int bench_rounds = 2;
  bool bench_complete = false;
  std::string bench_out = "bench.json";
  std::string bench_format = "native";
  bench->add_option("--family", family, "DJ | GHZ | GraphState | QFT | QFTEntangled | QAOAMaxCut");
  bench->add_option("--n", bench_n, "Qubit count")->required();
  bench->add_option("--seed", bench_seed, "Generator seed");
  bench->add_option("--rounds", bench_rounds, "QAOA rounds");
  bench->add_flag("--complete", bench_complete, "Complete graph for graph benchmarks");
  bench->add_option("--out", bench_out, "Output file");
  bench->add_option("--format", bench_format, "native | qasm2");

  // topology
  auto* topo = app.add_subcommand("topology", "Emit a topology file");
  std::string topo_spec = "eagle127";
  std::string topo_out = "topology.json";
  topo->add_option("--topology", topo_spec, "eagle127 | line:N | file:PATH");
  topo->add_option("--out", topo_out, "Output file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (transpile->parsed())
      return cmd_transpile(circuit_file, bench_spec, topology_spec, layout_spec, mode, t2q,
                           tele_time_factor, p2q, tele_error_factor, trials, max_subset,
                           reuse_limit, max_path_len, seed, rounds, complete, out_dir, format);
    if (verify->parsed())
      return cmd_verify(original_file, final_file, layouts_file, verify_trials, tol);
    if (bench->parsed())
      return cmd_bench(family, bench_n, bench_seed, bench_rounds, bench_complete, bench_out,
                       bench_format);
    if (topo->parsed()) return cmd_topology(topo_spec, topo_out);
  } catch (const rtg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
