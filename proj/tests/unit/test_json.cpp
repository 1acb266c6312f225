// Copyright 2026 The gmsc developers
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
#include <random>

#include "gmsc/json_io.hpp"
#include "gmsc/sim.hpp"
#include "gmsc/targeted.hpp"

using namespace gmsc;

TEST_CASE("empty circuit document") {
  Circuit c(1);
  std::string j = emit_json(c);
  REQUIRE(j == R"({"num_qubits":1,"output_relabeling":null,"gates":[]})");
  REQUIRE(parse_json(j) == c);
}

TEST_CASE("gms gate document carries the angle") {
  Circuit c(3);
  c.append(Gate::gms(QubitSet{0, 2}, Angle(kPi / 2)));
  std::string j = emit_json(c);
  REQUIRE(j.find(R"("kind":"gms","qubits":[0,2],"angle":1.5707963267948966)") !=
          std::string::npos);
  REQUIRE(parse_json(j) == c);
}

TEST_CASE("round trip over random circuits, including compiled output") {
  std::mt19937_64 rng(31415);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    Circuit c = random_clifford_phases_circuit(n, 20, static_cast<int>(rng() % 4), rng());
    REQUIRE(parse_json(emit_json(c)) == c);

    auto [compiled, report] = compile_targeted(c);
    Circuit back = parse_json(emit_json(compiled));
    REQUIRE(back == compiled);
  }
}

TEST_CASE("emit_json is deterministic") {
  Circuit c(4);
  c.append(Gate::gcz(QubitSet{3, 1, 0}));
  c.append(Gate::rz(2, Angle(0.1234567891234567)));
  c.set_output_relabeling({1, 0, 2, 3});
  REQUIRE(emit_json(c) == emit_json(parse_json(emit_json(c))));
}

TEST_CASE("schema violations raise ParseError") {
  auto bad = [](const std::string& doc) {
    REQUIRE_THROWS_AS(parse_json(doc), ParseError);
  };
  bad("not json");
  bad(R"({"gates":[]})");
  bad(R"({"num_qubits":0,"gates":[]})");
  bad(R"({"num_qubits":2,"gates":[{"kind":"ccx","qubits":[0,1]}]})");
  bad(R"({"num_qubits":2,"gates":[{"kind":"h","qubits":[5]}]})");
  bad(R"({"num_qubits":2,"gates":[{"kind":"h","qubits":[0],"angle":1.0}]})");
  bad(R"({"num_qubits":2,"gates":[{"kind":"rz","qubits":[0]}]})");
  bad(R"({"num_qubits":2,"gates":[{"kind":"cx","qubits":[0,0]}]})");
  bad(R"({"num_qubits":2,"gates":[],"output_relabeling":[0,0]})");
}

TEST_CASE("fuzzed documents either parse or raise ParseError") {
  std::mt19937_64 rng(999);
  Circuit base(3);
  base.append(Gate::h(0));
  base.append(Gate::gzz(QubitSet{0, 1, 2}, Angle(kPi / 4)));
  std::string doc = emit_json(base);
  for (int trial = 0; trial < 300; ++trial) {
    std::string mutated = doc;
    int edits = 1 + static_cast<int>(rng() % 4);
    for (int e = 0; e < edits; ++e) {
      size_t pos = rng() % mutated.size();
      switch (rng() % 3) {
        case 0: mutated[pos] = static_cast<char>('!' + rng() % 90); break;
        case 1: mutated.erase(pos, 1); break;
        case 2: mutated.insert(pos, 1, static_cast<char>('!' + rng() % 90)); break;
      }
    }
    try {
      Circuit c = parse_json(mutated);
      REQUIRE(c.num_qubits >= 1);  // parsed: must be a valid circuit
    } catch (const ParseError&) {
      // fine
    }
  }
}

TEST_CASE("pauli-exp gates are not serializable") {
  Circuit c(2);
  c.append(Gate::pauli_exp(PauliExp(PauliString({Pauli::Z, Pauli::Z}), Angle(0.5))));
  REQUIRE_THROWS_AS(emit_json(c), Error);
}
