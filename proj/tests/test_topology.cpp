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
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "rtg/eagle127.hpp"
#include "rtg/topology.hpp"

using namespace rtg;

namespace {

Layout line_layout(int first, int count) {
  std::vector<int> phys(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) phys[static_cast<std::size_t>(i)] = first + i;
  return Layout(std::move(phys));
}

/// Exhaustive all-auxiliary path search (test oracle): every simple path
/// between u and v through auxiliaries only, up to max_len interior qubits.
void enumerate_paths(const CouplingMap& map, const std::set<int>& data, int cur, int v,
                     int max_len, std::vector<int>& path, std::vector<std::vector<int>>& found) {
  for (int nb : map.neighbors(cur)) {
    if (nb == v) {
      if (!path.empty()) found.push_back(path);
      continue;
    }
    if (data.count(nb)) continue;
    if (std::find(path.begin(), path.end(), nb) != path.end()) continue;
    if (static_cast<int>(path.size()) >= max_len) continue;
    path.push_back(nb);
    enumerate_paths(map, data, nb, v, max_len, path, found);
    path.pop_back();
  }
}

}  // namespace

TEST_CASE("line maps") {
  CHECK(line_map(2).native_edges().size() == 1);
  CHECK(line_map(15).native_edges().size() == 14);
  const CouplingMap three = line_map(3);
  CHECK(three.distances_from(0)[2] == 2);
  CHECK_THROWS_AS(line_map(1), ValidationError);
}

TEST_CASE("embedded eagle topology") {
  const CouplingMap eagle = heavy_hex_eagle();
  CHECK(eagle.num_physical() == 127);
  // every vertex appears in some edge
  std::set<int> seen;
  for (const QubitPair& e : eagle.native_edges()) {
    seen.insert(e.a);
    seen.insert(e.b);
  }
  CHECK(seen.size() == 127);
  // row qubits 18..32 form a contiguous native line
  for (int q = 18; q < 32; ++q) CHECK(eagle.adjacent(q, q + 1));
}

TEST_CASE("eagle edge count matches an independent reconstruction") {
  // the heavy-hex pattern: seven rows plus four vertical couplers between
  // consecutive rows, columns alternating between {0,4,8,12} and {2,6,10,14}
  const std::vector<std::pair<int, int>> row_span{{0, 13},   {18, 32},  {37, 51}, {56, 70},
                                                  {75, 89},  {94, 108}, {113, 126}};
  std::size_t expected_edges = 0;
  for (const auto& [lo, hi] : row_span) expected_edges += static_cast<std::size_t>(hi - lo);
  expected_edges += 6 * 4 * 2;  // six coupler rows, four couplers, two edges each
  CHECK(heavy_hex_eagle().native_edges().size() == expected_edges);
  CHECK(expected_edges == 144);
}

TEST_CASE("auxiliary qubits are the layout complement") {
  const CouplingMap eagle = heavy_hex_eagle();
  CHECK(auxiliary_qubits(eagle, line_layout(18, 15)).size() == 112);

  const CouplingMap five = line_map(5);
  CHECK(auxiliary_qubits(five, line_layout(0, 5)).empty());
  CHECK(auxiliary_qubits(five, line_layout(0, 3)) == std::vector<int>{3, 4});
}

TEST_CASE("virtual edge enumeration on the eagle line layout") {
  const CouplingMap eagle = heavy_hex_eagle();
  const Layout layout = line_layout(18, 15);
  const auto edges = enumerate_virtual_edges(eagle, layout, 12);
  const auto find = [&](int u, int v) {
    return std::find_if(edges.begin(), edges.end(), [&](const VirtualEdge& e) {
      return e.endpoints == QubitPair(u, v);
    });
  };
  // the two connections used for the QAOA case study exist
  auto e2028 = find(20, 28);
  REQUIRE(e2028 != edges.end());
  auto e2230 = find(22, 30);
  REQUIRE(e2230 != edges.end());
  // distance-4 line pairs route through one coupler row with N = 7
  auto e2226 = find(22, 26);
  REQUIRE(e2226 != edges.end());
  CHECK(e2226->distance() == 7);
  CHECK(e2226->aux_path == std::vector<int>{15, 4, 5, 6, 7, 8, 16});
}

TEST_CASE("dangling auxiliaries yield no virtual edges") {
  const CouplingMap five = line_map(5);
  CHECK(enumerate_virtual_edges(five, line_layout(0, 3), 4).empty());
}

TEST_CASE("shortest path wins on the 5-cycle") {
  CouplingMap cycle(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  const Layout layout({0, 2});
  const auto edges = enumerate_virtual_edges(cycle, layout, 4);
  REQUIRE(edges.size() == 1);
  CHECK(edges[0].endpoints == QubitPair(0, 2));
  CHECK(edges[0].aux_path == std::vector<int>{1});
}

TEST_CASE("enumerated paths are native-connected and minimal") {
  const CouplingMap eagle = heavy_hex_eagle();
  const Layout layout = line_layout(18, 15);
  const std::set<int> data{layout.physical.begin(), layout.physical.end()};
  for (const VirtualEdge& e : enumerate_virtual_edges(eagle, layout, 12)) {
    int prev = e.endpoints.a;
    for (int a : e.aux_path) {
      CHECK(eagle.adjacent(prev, a));
      CHECK(!data.count(a));
      prev = a;
    }
    CHECK(eagle.adjacent(prev, e.endpoints.b));
  }

  // exhaustive-minimality oracle on small maps
  CouplingMap grid(9, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {6, 7}, {7, 8},
                       {0, 3}, {3, 6}, {1, 4}, {4, 7}, {2, 5}, {5, 8}});
  const Layout grid_layout({0, 2, 6});
  const std::set<int> grid_data{0, 2, 6};
  for (const VirtualEdge& e : enumerate_virtual_edges(grid, grid_layout, 7)) {
    std::vector<std::vector<int>> all;
    std::vector<int> scratch;
    enumerate_paths(grid, grid_data, e.endpoints.a, e.endpoints.b, 7, scratch, all);
    REQUIRE(!all.empty());
    std::size_t shortest = all[0].size();
    for (const auto& p : all) shortest = std::min(shortest, p.size());
    CHECK(e.aux_path.size() == shortest);
  }
}

TEST_CASE("enumeration is deterministic") {
  const CouplingMap eagle = heavy_hex_eagle();
  const Layout layout = line_layout(18, 15);
  const auto a = enumerate_virtual_edges(eagle, layout, 8);
  const auto b = enumerate_virtual_edges(eagle, layout, 8);
  CHECK(a == b);
}

TEST_CASE("extend_with_virtual installs disjoint subsets only") {
  const CouplingMap eagle = heavy_hex_eagle();
  const Layout layout = line_layout(18, 15);
  const auto edges = enumerate_virtual_edges(eagle, layout, 12);
  const auto find = [&](int u, int v) {
    return *std::find_if(edges.begin(), edges.end(), [&](const VirtualEdge& e) {
      return e.endpoints == QubitPair(u, v);
    });
  };

  CHECK(extend_with_virtual(eagle, {}).virtual_edges().empty());

  const CouplingMap extended = extend_with_virtual(eagle, {find(20, 28), find(22, 30)});
  CHECK(extended.virtual_edges().size() == 2);
  CHECK(extended.native_edges().size() == eagle.native_edges().size());
  CHECK(extended.virtual_edge_index(28, 20) == 0);

  // (22, 26) and (18, 22) share qubit 22 and their top-row paths overlap
  CHECK_THROWS_AS(extend_with_virtual(eagle, {find(22, 26), find(18, 22)}), ValidationError);
}

TEST_CASE("virtual edges must not duplicate native pairs or break paths") {
  const CouplingMap five = line_map(5);
  VirtualEdge bogus;
  bogus.endpoints = QubitPair(0, 1);
  bogus.aux_path = {2};
  CHECK_THROWS_AS(extend_with_virtual(five, {bogus}), ValidationError);

  VirtualEdge broken;
  broken.endpoints = QubitPair(0, 3);
  broken.aux_path = {2};  // 0-2 is not native
  CHECK_THROWS_AS(extend_with_virtual(five, {broken}), ValidationError);
}

TEST_CASE("topology file format round trip") {
  const CouplingMap eagle = heavy_hex_eagle();
  const auto j = to_json(eagle);
  const CouplingMap back = coupling_map_from_json(j);
  CHECK(back.num_physical() == eagle.num_physical());
  CHECK(back.native_edges() == eagle.native_edges());
  CHECK(back.name() == "eagle127");
}
