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
#include <deque>
#include <fstream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rtg/circuit.hpp"

namespace rtg {

inline constexpr int kTopologyFormatVersion = 1;

/// Unordered pair of physical qubits, stored with the smaller index first.
struct QubitPair {
  int a = 0;
  int b = 0;

  QubitPair() = default;
  QubitPair(int u, int v) : a(std::min(u, v)), b(std::max(u, v)) {}

  bool contains(int q) const { return a == q || b == q; }
  auto operator<=>(const QubitPair&) const = default;
};

/// Teleportation-backed connection between two data qubits: an ordered chain
/// of auxiliary qubits a_1..a_N with {u,a_1}, {a_i,a_i+1}, {a_N,v} native.
struct VirtualEdge {
  QubitPair endpoints;
  std::vector<int> aux_path;  // ordered from endpoints.a to endpoints.b

  int distance() const { return static_cast<int>(aux_path.size()); }
  bool operator==(const VirtualEdge&) const = default;
};

/// Injective map from logical circuit qubits to physical qubits.
struct Layout {
  std::vector<int> physical;  // physical[logical]

  Layout() = default;
  explicit Layout(std::vector<int> p) : physical(std::move(p)) {}

  int size() const { return static_cast<int>(physical.size()); }
  int at(int logical) const { return physical.at(static_cast<std::size_t>(logical)); }

  std::vector<int> data_set() const {
    std::vector<int> d = physical;
    std::sort(d.begin(), d.end());
    return d;
  }

  void validate(int num_physical) const {
    std::set<int> seen;
    for (int p : physical) {
      if (p < 0 || p >= num_physical)
        throw ValidationError("layout target " + std::to_string(p) + " outside device");
      if (!seen.insert(p).second)
        throw ValidationError("layout maps two logical qubits to physical " + std::to_string(p));
    }
  }
};

class CouplingMap {
 public:
  CouplingMap() = default;
  CouplingMap(int num_physical, std::vector<QubitPair> edges, std::string name = "")
      : num_physical_(num_physical), name_(std::move(name)) {
    for (const QubitPair& e : edges) add_native_edge(e.a, e.b);
  }

  int num_physical() const { return num_physical_; }
  const std::string& name() const { return name_; }
  const std::set<QubitPair>& native_edges() const { return native_; }
  const std::vector<VirtualEdge>& virtual_edges() const { return virtual_; }

  void add_native_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ValidationError("self-loop on qubit " + std::to_string(u));
    native_.insert(QubitPair(u, v));
  }

  bool adjacent(int u, int v) const { return native_.count(QubitPair(u, v)) > 0; }

  /// Index of the virtual edge joining {u, v}, or -1.
  int virtual_edge_index(int u, int v) const {
    const QubitPair p(u, v);
    for (std::size_t i = 0; i < virtual_.size(); ++i) {
      if (virtual_[i].endpoints == p) return static_cast<int>(i);
    }
    return -1;
  }

  const std::vector<int>& neighbors(int q) const {
    ensure_adjacency();
    return adjacency_[static_cast<std::size_t>(q)];
  }

  /// Native-edge shortest-path distances from `source` (-1 = unreachable).
  std::vector<int> distances_from(int source) const {
    check_vertex(source);
    std::vector<int> dist(static_cast<std::size_t>(num_physical_), -1);
    std::deque<int> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
      const int cur = queue.front();
      queue.pop_front();
      for (int nb : neighbors(cur)) {
        if (dist[static_cast<std::size_t>(nb)] < 0) {
          dist[static_cast<std::size_t>(nb)] = dist[static_cast<std::size_t>(cur)] + 1;
          queue.push_back(nb);
        }
      }
    }
    return dist;
  }

  void set_virtual_edges(std::vector<VirtualEdge> edges) {
    for (const VirtualEdge& e : edges) validate_virtual_edge(e);
    virtual_ = std::move(edges);
  }

  void validate_virtual_edge(const VirtualEdge& e) const {
    if (e.aux_path.empty()) throw ValidationError("virtual edge with empty auxiliary path");
    if (native_.count(e.endpoints))
      throw ValidationError("virtual edge duplicates native edge (" +
                            std::to_string(e.endpoints.a) + ", " + std::to_string(e.endpoints.b) + ")");
    int prev = e.endpoints.a;
    for (int a : e.aux_path) {
      if (!adjacent(prev, a))
        throw ValidationError("virtual-edge path hop (" + std::to_string(prev) + ", " +
                              std::to_string(a) + ") is not a native edge");
      prev = a;
    }
    if (!adjacent(prev, e.endpoints.b))
      throw ValidationError("virtual-edge path does not reach endpoint " +
                            std::to_string(e.endpoints.b));
  }

 private:
  void check_vertex(int q) const {
    if (q < 0 || q >= num_physical_)
      throw ValidationError("physical qubit " + std::to_string(q) + " out of range");
  }

  void ensure_adjacency() const {
    if (adjacency_.size() == static_cast<std::size_t>(num_physical_) &&
        adjacency_edge_count_ == native_.size())
      return;
    adjacency_.assign(static_cast<std::size_t>(num_physical_), {});
    for (const QubitPair& e : native_) {
      adjacency_[static_cast<std::size_t>(e.a)].push_back(e.b);
      adjacency_[static_cast<std::size_t>(e.b)].push_back(e.a);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
    adjacency_edge_count_ = native_.size();
  }

  int num_physical_ = 0;
  std::string name_;
  std::set<QubitPair> native_;
  std::vector<VirtualEdge> virtual_;
  mutable std::vector<std::vector<int>> adjacency_;
  mutable std::size_t adjacency_edge_count_ = 0;
};

inline CouplingMap line_map(int n) {
  if (n < 2) throw ValidationError("line map needs at least 2 qubits");
  std::vector<QubitPair> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return CouplingMap(n, std::move(edges), "line" + std::to_string(n));
}

/// Physical qubits not claimed by the layout.
inline std::vector<int> auxiliary_qubits(const CouplingMap& map, const Layout& layout) {
  layout.validate(map.num_physical());
  std::set<int> data(layout.physical.begin(), layout.physical.end());
  std::vector<int> aux;
  for (int q = 0; q < map.num_physical(); ++q) {
    if (!data.count(q)) aux.push_back(q);
  }
  return aux;
}

/// For every non-adjacent data pair reachable through auxiliary qubits with
/// at most max_len path qubits, emits one VirtualEdge carrying a shortest
/// such path. Ties break toward the lexicographically smallest vertex
/// sequence; output is sorted by endpoints, so identical inputs produce
/// identical lists.
inline std::vector<VirtualEdge> enumerate_virtual_edges(const CouplingMap& map,
                                                        const Layout& layout, int max_len) {
  if (max_len < 1) throw ValidationError("max_len must be >= 1");
  layout.validate(map.num_physical());
  const std::vector<int> data = layout.data_set();
  std::vector<bool> is_data(static_cast<std::size_t>(map.num_physical()), false);
  for (int q : data) is_data[static_cast<std::size_t>(q)] = true;

  std::vector<VirtualEdge> out;
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (std::size_t k = i + 1; k < data.size(); ++k) {
      const int u = data[i];
      const int v = data[k];
      if (map.adjacent(u, v)) continue;

      // BFS from v through auxiliary vertices only, then walk from u picking
      // the smallest-index neighbor that decreases the distance. This yields
      // the lexicographically smallest shortest path.
      std::vector<int> dist(static_cast<std::size_t>(map.num_physical()), -1);
      std::deque<int> queue{v};
      dist[static_cast<std::size_t>(v)] = 0;
      while (!queue.empty()) {
        const int cur = queue.front();
        queue.pop_front();
        if (dist[static_cast<std::size_t>(cur)] > max_len) continue;
        for (int nb : map.neighbors(cur)) {
          if (dist[static_cast<std::size_t>(nb)] >= 0) continue;
          if (nb != u && is_data[static_cast<std::size_t>(nb)]) continue;
          dist[static_cast<std::size_t>(nb)] = dist[static_cast<std::size_t>(cur)] + 1;
          queue.push_back(nb);
        }
      }
      const int du = dist[static_cast<std::size_t>(u)];
      if (du < 2 || du - 1 > max_len) continue;  // du - 1 auxiliary qubits on the path

      VirtualEdge edge;
      edge.endpoints = QubitPair(u, v);
      int cur = u;
      while (dist[static_cast<std::size_t>(cur)] > 1) {
        for (int nb : map.neighbors(cur)) {
          if (nb != v && !is_data[static_cast<std::size_t>(nb)] &&
              dist[static_cast<std::size_t>(nb)] == dist[static_cast<std::size_t>(cur)] - 1) {
            edge.aux_path.push_back(nb);
            cur = nb;
            break;
          }
        }
      }
      if (u > v) {  // stored path runs from endpoints.a to endpoints.b
        std::reverse(edge.aux_path.begin(), edge.aux_path.end());
      }
      out.push_back(std::move(edge));
    }
  }
  return out;
}

/// Returns `map` with virtual_edges = subset. The subset must be pairwise
/// qubit-disjoint over endpoints and auxiliary paths.
inline CouplingMap extend_with_virtual(const CouplingMap& map,
                                       const std::vector<VirtualEdge>& subset) {
  std::set<int> used;
  for (const VirtualEdge& e : subset) {
    std::vector<int> qubits{e.endpoints.a, e.endpoints.b};
    qubits.insert(qubits.end(), e.aux_path.begin(), e.aux_path.end());
    for (int q : qubits) {
      if (!used.insert(q).second)
        throw ValidationError("virtual edges share qubit " + std::to_string(q));
    }
  }
  CouplingMap extended = map;
  extended.set_virtual_edges(subset);
  return extended;
}

// -- topology file format -----------------------------------------------------

inline nlohmann::ordered_json to_json(const CouplingMap& map) {
  nlohmann::ordered_json j;
  j["version"] = kTopologyFormatVersion;
  if (!map.name().empty()) j["name"] = map.name();
  j["num_qubits"] = map.num_physical();
  j["edges"] = nlohmann::ordered_json::array();
  for (const QubitPair& e : map.native_edges()) j["edges"].push_back({e.a, e.b});
  return j;
}

inline CouplingMap coupling_map_from_json(const nlohmann::json& j) {
  if (j.at("version").get<int>() != kTopologyFormatVersion)
    throw Error("unsupported topology format version");
  std::vector<QubitPair> edges;
  for (const auto& e : j.at("edges")) {
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  return CouplingMap(j.at("num_qubits").get<int>(), std::move(edges),
                     j.contains("name") ? j["name"].get<std::string>() : "");
}

inline CouplingMap parse_topology(const std::string& text) {
  try {
    return coupling_map_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed topology data: ") + e.what());
  }
}

inline CouplingMap read_topology_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_topology(text);
}

inline void write_topology_file(const CouplingMap& map, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << to_json(map).dump(2) << "\n";
}

}  // namespace rtg
