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

#include <fstream>
#include <string>

#include <json.hpp>

#include "rtg/circuit.hpp"

namespace rtg {

inline constexpr int kCircuitFormatVersion = 1;

namespace detail {

inline std::string kind_tag(GateKind kind) {
  switch (kind) {
    case GateKind::OneQubit: return "one_qubit";
    case GateKind::TwoQubit: return "two_qubit";
    case GateKind::VirtualTwoQubit: return "virtual_two_qubit";
    case GateKind::Measure: return "measure";
    case GateKind::Reset: return "reset";
    case GateKind::ConditionalPauli: return "conditional_pauli";
  }
  throw Error("unknown gate kind");
}

inline GateKind kind_from_tag(const std::string& tag) {
  if (tag == "one_qubit") return GateKind::OneQubit;
  if (tag == "two_qubit") return GateKind::TwoQubit;
  if (tag == "virtual_two_qubit") return GateKind::VirtualTwoQubit;
  if (tag == "measure") return GateKind::Measure;
  if (tag == "reset") return GateKind::Reset;
  if (tag == "conditional_pauli") return GateKind::ConditionalPauli;
  throw Error("unknown gate kind '" + tag + "'");
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const Gate& g) {
  nlohmann::ordered_json j;
  j["kind"] = detail::kind_tag(g.kind);
  j["name"] = g.name;
  j["qubits"] = g.qubits;
  if (!g.clbits.empty()) j["clbits"] = g.clbits;
  if (!g.params.empty()) j["params"] = g.params;
  if (g.kind == GateKind::Measure) j["basis"] = (g.basis == Basis::Z) ? "z" : "x";
  if (g.condition) {
    j["condition"] = {{"bits", g.condition->bits}, {"parity", g.condition->parity}};
  }
  if (g.edge >= 0) j["edge"] = g.edge;
  if (g.group >= 0) j["group"] = g.group;
  return j;
}

inline Gate gate_from_json(const nlohmann::json& j) {
  Gate g;
  g.kind = detail::kind_from_tag(j.at("kind").get<std::string>());
  g.name = j.at("name").get<std::string>();
  g.qubits = j.at("qubits").get<std::vector<int>>();
  if (j.contains("clbits")) g.clbits = j["clbits"].get<std::vector<int>>();
  if (j.contains("params")) g.params = j["params"].get<std::vector<double>>();
  if (j.contains("basis")) g.basis = (j["basis"].get<std::string>() == "x") ? Basis::X : Basis::Z;
  if (j.contains("condition")) {
    Condition c;
    c.bits = j["condition"].at("bits").get<std::vector<int>>();
    c.parity = j["condition"].at("parity").get<int>();
    g.condition = std::move(c);
  }
  if (j.contains("edge")) g.edge = j["edge"].get<int>();
  if (j.contains("group")) g.group = j["group"].get<int>();
  return g;
}

inline nlohmann::ordered_json to_json(const Circuit& circuit) {
  nlohmann::ordered_json j;
  j["version"] = kCircuitFormatVersion;
  j["num_qubits"] = circuit.num_qubits();
  j["num_clbits"] = circuit.num_clbits();
  if (!circuit.data_qubits().empty()) j["data_qubits"] = circuit.data_qubits();
  j["gates"] = nlohmann::ordered_json::array();
  for (const Gate& g : circuit.gates()) j["gates"].push_back(to_json(g));
  return j;
}

inline Circuit circuit_from_json(const nlohmann::json& j) {
  if (j.at("version").get<int>() != kCircuitFormatVersion)
    throw Error("unsupported circuit format version");
  Circuit circuit(j.at("num_qubits").get<int>(), j.at("num_clbits").get<int>());
  if (j.contains("data_qubits")) circuit.set_data_qubits(j["data_qubits"].get<std::vector<int>>());
  for (const auto& gj : j.at("gates")) circuit.add(gate_from_json(gj));
  circuit.validate();
  return circuit;
}

inline std::string serialize(const Circuit& circuit) { return to_json(circuit).dump(2) + "\n"; }

inline Circuit deserialize_circuit(const std::string& text) {
  return circuit_from_json(nlohmann::json::parse(text));
}

inline void write_circuit_file(const Circuit& circuit, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << serialize(circuit);
}

inline Circuit read_circuit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return deserialize_circuit(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed circuit file '" + path + "': " + e.what());
  }
}

}  // namespace rtg
