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

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "rtg/serialize.hpp"
#include "test_util.hpp"

using namespace rtg;

TEST_CASE("serialization round-trip is the identity") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 25; ++round) {
    Circuit c = testutil::random_full_circuit(5, 4, 30, rng);
    c.set_data_qubits({0, 2, 4});
    const std::string text = serialize(c);
    const Circuit back = deserialize_circuit(text);
    CHECK(back == c);
    // serialized form is byte-stable
    CHECK(serialize(back) == text);
  }
}

TEST_CASE("angles and unitaries survive the round trip bit-exactly") {
  Circuit c(2);
  c.add(Gate::rz(0.1234567891234567, 0));
  c.add(Gate::rzz(M_PI / 3.0, 0, 1));
  const Unitary2 u{Complex(1 / std::sqrt(2.0), 0), Complex(0, 1 / std::sqrt(2.0)),
                   Complex(0, 1 / std::sqrt(2.0)), Complex(1 / std::sqrt(2.0), 0)};
  c.add(Gate::cu(u, 1, 0));
  const Circuit back = deserialize_circuit(serialize(c));
  REQUIRE(back.size() == 3);
  CHECK(back.gate(0).params[0] == 0.1234567891234567);
  CHECK(back.gate(2).params == c.gate(2).params);
}

TEST_CASE("deserialization validates the circuit") {
  const std::string bad = R"({
    "version": 1, "num_qubits": 2, "num_clbits": 0,
    "gates": [{"kind": "one_qubit", "name": "h", "qubits": [7]}]
  })";
  CHECK_THROWS_AS(deserialize_circuit(bad), ValidationError);

  const std::string wrong_version = R"({"version": 99, "num_qubits": 1, "num_clbits": 0, "gates": []})";
  CHECK_THROWS_AS(deserialize_circuit(wrong_version), Error);
}

TEST_CASE("file io round trip") {
  Circuit c(3, 1);
  c.add(Gate::h(0));
  c.add(Gate::measure(0, 0, Basis::X));
  c.add(Gate::conditional_pauli('z', 2, {0}, 0));
  const std::string path = "serialize_roundtrip_test.json";
  write_circuit_file(c, path);
  CHECK(read_circuit_file(path) == c);
  std::remove(path.c_str());
}
