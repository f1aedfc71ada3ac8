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

#include <catch2/catch_amalgamated.hpp>

#include "rtg/circuit.hpp"

using namespace rtg;

TEST_CASE("gate factories populate fields") {
  const Gate cx = Gate::cx(0, 1);
  CHECK(cx.kind == GateKind::TwoQubit);
  CHECK(cx.qubits == std::vector<int>{0, 1});

  const Gate m = Gate::measure(2, 0);
  CHECK(m.kind == GateKind::Measure);
  CHECK(m.clbits == std::vector<int>{0});

  const Gate cond = Gate::conditional_pauli('z', 1, {0, 2});
  REQUIRE(cond.condition.has_value());
  CHECK(cond.condition->bits == std::vector<int>{0, 2});
  CHECK(cond.condition->parity == 1);
}

TEST_CASE("circuit rejects malformed gates") {
  Circuit c(2, 1);
  CHECK_THROWS_AS(c.add(Gate::h(2)), ValidationError);
  CHECK_THROWS_AS(c.add(Gate::cx(1, 1)), ValidationError);
  CHECK_THROWS_AS(c.add(Gate::measure(0, 1)), ValidationError);
  c.add(Gate::h(0));
  CHECK(c.size() == 1);
}

TEST_CASE("validate flags classical read before write") {
  Circuit c(2, 1);
  c.add(Gate::conditional_pauli('x', 0, {0}));
  CHECK_THROWS_AS(c.validate(), ValidationError);

  Circuit ok(2, 1);
  ok.add(Gate::measure(0, 0));
  ok.add(Gate::conditional_pauli('x', 1, {0}));
  CHECK_NOTHROW(ok.validate());
}

TEST_CASE("validation errors carry the offending gate index") {
  Circuit c(2, 1);
  c.add(Gate::h(0));
  c.add(Gate::conditional_pauli('x', 0, {0}));
  try {
    c.validate();
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.gate_index() == 1);
  }
}

TEST_CASE("lower_swaps expands swap to three CNOTs") {
  Circuit c(3);
  c.add(Gate::h(0));
  c.add(Gate::swap(0, 1));
  const Circuit lowered = lower_swaps(c);
  REQUIRE(lowered.size() == 4);
  CHECK(lowered.gate(1) == Gate::cx(0, 1));
  CHECK(lowered.gate(2) == Gate::cx(1, 0));
  CHECK(lowered.gate(3) == Gate::cx(0, 1));
}
