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

#include "gmsc/circuit.hpp"
#include "gmsc/sim.hpp"

using namespace gmsc;

TEST_CASE("gate and circuit validation") {
  Circuit c(3);
  c.append(Gate::h(0));
  c.append(Gate::cnot(0, 2));
  REQUIRE_THROWS_AS(c.append(Gate::h(3)), Error);
  REQUIRE_THROWS_AS(Gate::cnot(1, 1), Error);
  REQUIRE_THROWS_AS(QubitSet({0, 0, 1}), Error);
  REQUIRE_THROWS_AS(c.set_output_relabeling({0, 1, 1}), Error);
  c.set_output_relabeling({0, 1, 2});  // identity folds away
  REQUIRE_FALSE(c.output_relabeling.has_value());
  REQUIRE(Gate::gms(QubitSet{0, 2}, Angle(0.5)).qubits == std::vector<int>{0, 2});
}

TEST_CASE("count_non_clifford") {
  Circuit c(2);
  c.append(Gate::h(0));
  c.append(Gate::cnot(0, 1));
  REQUIRE(count_non_clifford(c) == 0);

  Circuit d(2);
  d.append(Gate::rz(0, Angle(kPi / 4)));
  d.append(Gate::rz(1, Angle(kPi / 2)));
  d.append(Gate::rz(0, Angle(kPi / 4)));
  REQUIRE(count_non_clifford(d) == 2);

  // by construction of the generator
  Circuit r = random_clifford_phases_circuit(4, 50, 7, 321);
  REQUIRE(count_non_clifford(r) == 7);

  Circuit bad(2);
  bad.append(Gate::gzz(QubitSet{0, 1}, Angle(kPi / 4)));
  REQUIRE_THROWS_AS(count_non_clifford(bad), Error);
}

TEST_CASE("gcz_as_gzz realizes the CZ product") {
  // k = 1: gzz(pi/2) then one sdg per qubit
  auto seq = gcz_as_gzz(QubitSet{0, 1});
  REQUIRE(seq.size() == 3);
  REQUIRE(seq[0].kind == GateKind::Gzz);
  REQUIRE(seq[1].kind == GateKind::Sdg);
  REQUIRE(seq[2].kind == GateKind::Sdg);

  REQUIRE(gcz_as_gzz(QubitSet{0}).empty());

  for (int n = 2; n <= 5; ++n) {
    std::vector<int> all;
    for (int q = 0; q < n; ++q) all.push_back(q);
    QubitSet s(all);
    Circuit lhs(n);
    lhs.append(gcz_as_gzz(s));
    Circuit rhs(n);
    rhs.append(Gate::gcz(s));
    REQUIRE(equiv_up_to_phase(unitary_of(lhs), unitary_of(rhs), 1e-10).equivalent);
  }

  // |S| = 3 leaves sdg^2 = z on each qubit
  auto seq3 = gcz_as_gzz(QubitSet{0, 1, 2});
  REQUIRE(seq3.size() == 4);
  for (size_t i = 1; i < seq3.size(); ++i) REQUIRE(seq3[i].kind == GateKind::Z);
}

TEST_CASE("gzz_as_gms is an exact rewrite") {
  auto seq = gzz_as_gms(QubitSet{0, 1}, Angle(kPi / 2));
  REQUIRE(seq.size() == 5);
  REQUIRE(gzz_as_gms(QubitSet{}, Angle(1.0)).empty());

  Circuit lhs(3), rhs(3);
  lhs.append(gzz_as_gms(QubitSet{0, 1, 2}, Angle(kPi / 4)));
  rhs.append(Gate::gzz(QubitSet{0, 1, 2}, Angle(kPi / 4)));
  REQUIRE(unitary_of(lhs).max_abs_diff(unitary_of(rhs)) < 1e-12);

  // gzz equals the pairwise ZZ product in any order
  Circuit pairwise(3);
  pairwise.append(Gate::gzz(QubitSet{1, 2}, Angle(kPi / 4)));
  pairwise.append(Gate::gzz(QubitSet{0, 2}, Angle(kPi / 4)));
  pairwise.append(Gate::gzz(QubitSet{0, 1}, Angle(kPi / 4)));
  REQUIRE(unitary_of(pairwise).max_abs_diff(unitary_of(rhs)) < 1e-12);
}

TEST_CASE("dagger inverts circuits") {
  Circuit c(1);
  c.append(Gate::h(0));
  Circuit d = dagger(c);
  REQUIRE(d.gates.size() == 1);
  REQUIRE(d.gates[0].kind == GateKind::H);

  Circuit c2(2);
  c2.append(Gate::s(0));
  c2.append(Gate::cnot(0, 1));
  Circuit d2 = dagger(c2);
  REQUIRE(d2.gates[0].kind == GateKind::Cnot);
  REQUIRE(d2.gates[1].kind == GateKind::Sdg);

  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    Circuit r = random_clifford_phases_circuit(n, 20, 3, rng());
    Circuit both(n);
    both.append(r.gates);
    both.append(dagger(r).gates);
    REQUIRE(equiv_up_to_phase(unitary_of(both), DenseUnitary(n), 1e-9).equivalent);
  }
}

TEST_CASE("dagger handles output relabelings") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 3;
    Circuit r = random_clifford_phases_circuit(n, 15, 2, rng());
    std::vector<int> perm{1, 2, 0};
    r.set_output_relabeling(perm);
    Circuit d = dagger(r);
    // U * U^dagger is the identity
    DenseUnitary u = unitary_of(r);
    DenseUnitary v = unitary_of(d);
    DenseUnitary prod(n);
    for (size_t i = 0; i < prod.dim(); ++i)
      for (size_t j = 0; j < prod.dim(); ++j) {
        std::complex<double> acc = 0;
        for (size_t k = 0; k < prod.dim(); ++k) acc += u.at(i, k) * v.at(k, j);
        prod.at(i, j) = acc;
      }
    REQUIRE(equiv_up_to_phase(prod, DenseUnitary(n), 1e-9).equivalent);
  }
}

TEST_CASE("gzz angles add up to global phase") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 15; ++trial) {
    Angle a(std::uniform_real_distribution<double>(0, kTwoPi)(rng));
    Angle b(std::uniform_real_distribution<double>(0, kTwoPi)(rng));
    Circuit two(3), one(3);
    two.append(Gate::gzz(QubitSet{0, 1, 2}, a));
    two.append(Gate::gzz(QubitSet{0, 1, 2}, b));
    one.append(Gate::gzz(QubitSet{0, 1, 2}, a + b));
    REQUIRE(equiv_up_to_phase(unitary_of(two), unitary_of(one), 1e-10).equivalent);
  }
}

TEST_CASE("gms_count counts all global kinds uniformly") {
  Circuit c(3);
  c.append(Gate::gms(QubitSet{0, 1}, Angle(kPi / 2)));
  c.append(Gate::gzz(QubitSet{0, 1, 2}, Angle(kPi / 4)));
  c.append(Gate::gcz(QubitSet{1, 2}));
  c.append(Gate::h(0));
  c.append(Gate::cnot(0, 1));
  REQUIRE(gms_count(c) == 3);
}

TEST_CASE("lower_to_gms keeps the unitary and the global count") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    Circuit c(4);
    c.append(Gate::gcz(QubitSet{0, 1, 3}));
    c.append(Gate::rz(2, Angle(0.3)));
    c.append(Gate::gzz(QubitSet{0, 2}, Angle(0.7)));
    c.append(Gate::gms(QubitSet{1, 2, 3}, Angle(0.2)));
    Circuit low = lower_to_gms(c);
    for (const Gate& g : low.gates) {
      REQUIRE(g.kind != GateKind::Gzz);
      REQUIRE(g.kind != GateKind::Gcz);
    }
    REQUIRE(gms_count(low) == gms_count(c));
    REQUIRE(equiv_up_to_phase(unitary_of(low), unitary_of(c), 1e-10).equivalent);
  }
}

TEST_CASE("cancel_local_pairs drops inverse neighbours on a wire") {
  Circuit c(3);
  c.append(Gate::h(0));
  c.append(Gate::s(1));    // other wire in between is fine
  c.append(Gate::h(0));    // cancels with the first h
  c.append(Gate::sdg(1));  // cancels with the s
  c.append(Gate::h(2));
  c.append(Gate::cnot(2, 0));  // blocks cancellation across it
  c.append(Gate::h(2));
  auto kept = cancel_local_pairs(c.gates);
  REQUIRE(kept.size() == 3);
  REQUIRE(kept[0] == Gate::h(2));
  REQUIRE(kept[1] == Gate::cnot(2, 0));
  REQUIRE(kept[2] == Gate::h(2));

  std::mt19937_64 rng(3131);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    Circuit r = random_clifford_phases_circuit(n, 30, 3, rng());
    Circuit simplified(n);
    simplified.append(cancel_local_pairs(r.gates));
    REQUIRE(equiv_up_to_phase(unitary_of(simplified), unitary_of(r), 1e-10).equivalent);
    REQUIRE(gms_count(simplified) == gms_count(r));
  }
}

TEST_CASE("circuit depth") {
  Circuit c(3);
  REQUIRE(circuit_depth(c) == 0);
  c.append(Gate::h(0));
  c.append(Gate::h(1));
  REQUIRE(circuit_depth(c) == 1);
  c.append(Gate::cnot(0, 1));
  c.append(Gate::h(2));
  REQUIRE(circuit_depth(c) == 2);
}
