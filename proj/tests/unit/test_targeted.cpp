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

#include "gmsc/sim.hpp"
#include "gmsc/targeted.hpp"

using namespace gmsc;

namespace {

// Reference diagonal: exp(-i a/2 Z^S) on n qubits.
DenseUnitary phase_gadget_matrix(const QubitSet& s, Angle a, int n) {
  Circuit c(n);
  PauliString p = PauliString::identity(n);
  for (int q : s) p.paulis[q] = Pauli::Z;
  c.append(Gate::pauli_exp(PauliExp(p, a)));
  return unitary_of(c);
}

DenseUnitary cz_pairs_matrix(const std::set<std::pair<int, int>>& czs, int n) {
  Circuit c(n);
  for (auto [a, b] : czs) c.append(Gate::cz(a, b));
  return unitary_of(c);
}

}  // namespace

TEST_CASE("basis change maps the string onto Z over its support") {
  {
    auto bc = basis_change(PauliString({Pauli::Z, Pauli::Z}));
    REQUIRE(bc.forward.empty());
    REQUIRE(bc.support == QubitSet{0, 1});
  }
  {
    auto bc = basis_change(PauliString({Pauli::X}));
    REQUIRE(bc.forward.size() == 1);
    REQUIRE(bc.forward[0] == Gate::h(0));
    REQUIRE(bc.support == QubitSet{0});
  }
  {
    // conjugation check by the dense oracle: V P V^dagger = Z^S
    PauliString p({Pauli::I, Pauli::Y, Pauli::Z});
    auto bc = basis_change(p);
    REQUIRE(bc.support == QubitSet{1, 2});
    Circuit conj(3);
    conj.append(bc.inverse);  // operator: V P V^dagger needs P first... build V P V^dagger
    DenseUnitary m(3);
    for (const Gate& g : bc.inverse) m.apply_gate(g);
    m.apply_pauli(p);
    for (const Gate& g : bc.forward) m.apply_gate(g);
    // m = V * P * V^dagger (bc.inverse realizes V^dagger, applied first)
    DenseUnitary zz(3);
    PauliString target = PauliString::identity(3);
    target.paulis[1] = target.paulis[2] = Pauli::Z;
    zz.apply_pauli(target);
    REQUIRE(m.max_abs_diff(zz) < 1e-12);
  }
  REQUIRE_THROWS_AS(basis_change(PauliString::identity(3)), Error);
}

TEST_CASE("phase gadget: single-qubit support is a bare rz") {
  GadgetSynthesis g = synth_phase_gadget(QubitSet{0}, Angle(kPi / 4), 3);
  REQUIRE(g.emitted.size() == 1);
  REQUIRE(g.emitted[0] == Gate::rz(0, Angle(kPi / 4)));
  REQUIRE(g.garbage.is_identity());
  REQUIRE(g.global_gates == 0);
}

TEST_CASE("phase gadget equals the gadget unitary after its garbage") {
  std::mt19937_64 rng(100);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    std::vector<int> qs;
    for (int q = 0; q < n; ++q)
      if (rng() % 2 || static_cast<int>(qs.size()) < 2) qs.push_back(q);
    QubitSet s(qs);
    Angle a(std::uniform_real_distribution<double>(0, kTwoPi)(rng));
    GadgetSynthesis g = synth_phase_gadget(s, a, n);
    REQUIRE(g.global_gates == 1);

    // emitted, then the garbage Clifford, equals the gadget
    Circuit em(n);
    em.append(g.emitted);
    DenseUnitary u = unitary_of(em);
    NormalForm garb = extract_normal_form(g.garbage);
    for (const Gate& gg : garb.to_circuit().gates) u.apply_gate(gg);
    REQUIRE(equiv_up_to_phase(u, phase_gadget_matrix(s, a, n), 1e-10).equivalent);
  }
}

TEST_CASE("the ZZZIZ gadget never touches the idle qubit") {
  QubitSet s{0, 1, 2, 4};
  GadgetSynthesis g = synth_phase_gadget(s, Angle(0.9), 5);
  for (const Gate& gate : g.emitted)
    for (int q : gate.qubits) REQUIRE(q != 3);
  // and it realizes exp(-i 0.9/2 ZZZIZ) up to its garbage
  Circuit em(5);
  em.append(g.emitted);
  DenseUnitary u = unitary_of(em);
  for (const Gate& gg : extract_normal_form(g.garbage).to_circuit().gates) u.apply_gate(gg);
  REQUIRE(equiv_up_to_phase(u, phase_gadget_matrix(s, Angle(0.9), 5), 1e-10).equivalent);
}

TEST_CASE("any ladder target gives an equivalent gadget") {
  QubitSet s{0, 2, 3};
  Angle a(1.1);
  for (int t : s) {
    GadgetSynthesis g = synth_phase_gadget_with_target(s, a, 4, t);
    Circuit em(4);
    em.append(g.emitted);
    DenseUnitary u = unitary_of(em);
    for (const Gate& gg : extract_normal_form(g.garbage).to_circuit().gates) u.apply_gate(gg);
    REQUIRE(equiv_up_to_phase(u, phase_gadget_matrix(s, a, 4), 1e-10).equivalent);
  }
  REQUIRE_THROWS_AS(synth_phase_gadget_with_target(s, a, 4, 1), Error);
}

TEST_CASE("cz layer synthesis follows the greedy trace") {
  {
    auto gates = synth_cz_layer({{0, 1}}, 2);
    REQUIRE(gates.size() == 1);
    REQUIRE(gates[0] == Gate::gcz(QubitSet{0, 1}));
  }
  {
    // triangle collapses into one gcz
    auto gates = synth_cz_layer({{0, 1}, {0, 2}, {1, 2}}, 3);
    REQUIRE(gates.size() == 1);
    REQUIRE(gates[0] == Gate::gcz(QubitSet{0, 1, 2}));
  }
  {
    auto gates = synth_cz_layer({{0, 1}, {0, 2}}, 3);
    REQUIRE(gates.size() == 2);
    REQUIRE(gates[0] == Gate::gcz(QubitSet{0, 1, 2}));
    REQUIRE(gates[1] == Gate::gcz(QubitSet{1, 2}));
  }
  REQUIRE(synth_cz_layer({}, 4).empty());
}

TEST_CASE("cz layer synthesis: exhaustive small layers") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<std::pair<int, int>> all_pairs;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) all_pairs.emplace_back(a, b);
    int total = 1 << all_pairs.size();
    for (int mask = 0; mask < total; ++mask) {
      std::set<std::pair<int, int>> czs;
      for (size_t i = 0; i < all_pairs.size(); ++i)
        if (mask & (1 << i)) czs.insert(all_pairs[i]);
      auto gates = synth_cz_layer(czs, n);
      REQUIRE(static_cast<int>(gates.size()) <= n - 1);
      Circuit c(n);
      c.append(gates);
      REQUIRE(equiv_up_to_phase(unitary_of(c), cz_pairs_matrix(czs, n), 1e-10).equivalent);
    }
  }
}

TEST_CASE("fan-out via two gcz gates") {
  {
    auto gates = synth_fanout(0, QubitSet{1}, 2);
    Circuit c(2), want(2);
    c.append(gates);
    want.append(Gate::cnot(0, 1));
    REQUIRE(gms_count(c) <= 2);
    REQUIRE(equiv_up_to_phase(unitary_of(c), unitary_of(want), 1e-10).equivalent);
  }
  {
    auto gates = synth_fanout(0, QubitSet{1, 2}, 3);
    Circuit c(3), want(3);
    c.append(gates);
    want.append(Gate::cnot(0, 1));
    want.append(Gate::cnot(0, 2));
    REQUIRE(gms_count(c) == 2);
    REQUIRE(equiv_up_to_phase(unitary_of(c), unitary_of(want), 1e-10).equivalent);
  }
  {
    auto gates = synth_fanout(2, QubitSet{0, 1, 3}, 4);
    Circuit c(4), want(4);
    c.append(gates);
    want.append(Gate::cnot(2, 0));
    want.append(Gate::cnot(2, 1));
    want.append(Gate::cnot(2, 3));
    REQUIRE(gms_count(c) == 2);
    REQUIRE(equiv_up_to_phase(unitary_of(c), unitary_of(want), 1e-10).equivalent);
  }
  REQUIRE_THROWS_AS(synth_fanout(0, QubitSet{0, 1}, 3), Error);
}

TEST_CASE("cnot circuit synthesis: identity and a single cnot") {
  CnotSynthesis id = synth_cnot_circuit(GF2Matrix::identity(4));
  REQUIRE(id.circuit.gates.empty());
  REQUIRE(id.global_gates == 0);
  REQUIRE_THROWS_AS(synth_cnot_circuit(GF2Matrix(3)), Error);  // singular

  GF2Matrix m = GF2Matrix::identity(2);
  m.set(1, 0, true);  // x1 ^= x0
  CnotSynthesis cs = synth_cnot_circuit(m);
  REQUIRE(cs.global_gates <= 2);
  Circuit want(2);
  want.append(Gate::cnot(0, 1));
  REQUIRE(equiv_up_to_phase(unitary_of(cs.circuit), unitary_of(want), 1e-10).equivalent);
}

TEST_CASE("cnot circuit synthesis: random matrices meet the bound") {
  std::mt19937_64 rng(2200);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    GF2Matrix m = GF2Matrix::random_invertible(n, rng);
    CnotSynthesis cs = synth_cnot_circuit(m);
    REQUIRE(cs.global_gates <= 4 * n - 6);

    // linear action: basis columns match |x> -> |Mx> up to one global phase
    DenseUnitary u = unitary_of(cs.circuit);
    std::complex<double> phase = 0;
    for (size_t x = 0; x < u.dim(); ++x) {
      std::vector<std::uint8_t> bits(n);
      for (int q = 0; q < n; ++q) bits[q] = (x >> q) & 1;
      auto y = m.apply(bits);
      size_t yi = 0;
      for (int q = 0; q < n; ++q) yi |= static_cast<size_t>(y[q]) << q;
      for (size_t r = 0; r < u.dim(); ++r) {
        if (r == yi) {
          if (phase == std::complex<double>(0)) phase = u.at(r, x);
          REQUIRE(std::abs(u.at(r, x) - phase) < 1e-10);
          REQUIRE(std::abs(std::abs(phase) - 1.0) < 1e-10);
        } else {
          REQUIRE(std::abs(u.at(r, x)) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("triangular matrices cost at most 2n-3") {
  std::mt19937_64 rng(2300);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    GF2Matrix u = GF2Matrix::identity(n);
    bool upper = rng() % 2;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (upper)
          u.set(i, j, (rng() & 1) != 0);
        else
          u.set(j, i, (rng() & 1) != 0);
      }
    CnotSynthesis cs = synth_cnot_circuit(u);
    REQUIRE(cs.global_gates <= 2 * n - 3);
    REQUIRE_FALSE(cs.circuit.output_relabeling.has_value());
  }
}

TEST_CASE("clifford synthesis meets 6n-8 and round-trips") {
  std::mt19937_64 rng(2400);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    CliffordTableau t =
        tableau_from_circuit(random_clifford_phases_circuit(n, 20 * n, 0, rng()));
    CliffordSynthesis cs = synth_clifford(t);
    REQUIRE(cs.global_gates <= 6 * n - 8);
    REQUIRE(tableau_from_circuit(cs.circuit) == t);
  }
  // identity costs nothing
  REQUIRE(synth_clifford(CliffordTableau::identity(5)).global_gates == 0);
}

TEST_CASE("peephole merges adjacent inverse globals") {
  std::vector<Gate> gates;
  gates.push_back(Gate::gcz(QubitSet{0, 1, 2}));
  gates.push_back(Gate::s(3));  // commutes: off-support
  gates.push_back(Gate::gcz(QubitSet{0, 1, 2}));
  gates.push_back(Gate::gzz(QubitSet{0, 1}, Angle(0.5)));
  gates.push_back(Gate::z(0));  // diagonal: commutes on-support
  gates.push_back(Gate::gzz(QubitSet{0, 1}, Angle(-0.5)));
  auto merged = peephole_merge_globals(gates);
  REQUIRE(gms_count(Circuit(4)) == 0);
  int globals = 0;
  for (const Gate& g : merged) globals += g.is_global();
  REQUIRE(globals == 0);

  // H on a set qubit blocks the merge
  std::vector<Gate> blocked;
  blocked.push_back(Gate::gcz(QubitSet{0, 1}));
  blocked.push_back(Gate::h(0));
  blocked.push_back(Gate::gcz(QubitSet{0, 1}));
  REQUIRE(peephole_merge_globals(blocked).size() == 3);
}

TEST_CASE("compile_targeted: spec examples") {
  {
    // pure Clifford: N = 0, count <= 6n-8
    Circuit c = random_clifford_phases_circuit(4, 35, 0, 91);
    auto [out, rep] = compile_targeted(c);
    REQUIRE(rep.non_clifford_count == 0);
    REQUIRE(rep.global_gate_count <= 6 * 4 - 8);
    REQUIRE(tableau_equiv(c, out));
  }
  {
    // single T behind a CNOT on n=3: count <= 1 + 10
    Circuit c(3);
    c.append(Gate::cnot(0, 1));
    c.append(Gate::rz(1, Angle(kPi / 4)));
    auto [out, rep] = compile_targeted(c);
    REQUIRE(rep.non_clifford_count == 1);
    REQUIRE(rep.global_gate_count <= 11);
    REQUIRE(rep.rotation_gate_count == 1);
    REQUIRE(circuits_equivalent(c, out, 1e-8));
  }
  {
    Circuit c(2);
    auto [out, rep] = compile_targeted(c);
    REQUIRE(out.gates.empty());
    REQUIRE(rep.global_gate_count == 0);
  }
  {
    // n = 1: local gates only, bound collapses to max(0, 6n-8) + N
    Circuit c(1);
    c.append(Gate::h(0));
    c.append(Gate::rz(0, Angle(0.37)));
    c.append(Gate::h(0));
    auto [out, rep] = compile_targeted(c);
    REQUIRE(rep.global_gate_count == 0);
    REQUIRE(rep.bound == 1);
    REQUIRE(circuits_equivalent(c, out, 1e-10));
  }
}

TEST_CASE("gate vocabulary edge cases") {
  // global gates on sets of size <= 1 are the identity
  Circuit tiny(2);
  tiny.append(Gate::gzz(QubitSet{0}, Angle(0.9)));
  tiny.append(Gate::gcz(QubitSet{1}));
  tiny.append(Gate::gms(QubitSet{}, Angle(0.4)));
  REQUIRE(unitary_of(tiny).max_abs_diff(DenseUnitary(2)) < 1e-15);

  // PauliExp folds a negative string sign into the angle
  PauliExp pe(PauliString({Pauli::Z, Pauli::Z}, -1), Angle(0.5));
  REQUIRE(pe.string.sign == +1);
  REQUIRE(pe.angle == Angle(-0.5));
  Circuit a(2), b(2);
  a.append(Gate::pauli_exp(pe));
  b.append(Gate::pauli_exp(PauliExp(PauliString({Pauli::Z, Pauli::Z}, +1), Angle(-0.5))));
  REQUIRE(unitary_of(a).max_abs_diff(unitary_of(b)) < 1e-15);
}

TEST_CASE("compile_targeted: one gcz per wide rotation, none for narrow ones") {
  std::mt19937_64 rng(2500);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    Circuit c = random_clifford_phases_circuit(n, 30, static_cast<int>(rng() % 8), rng());
    auto [out, rep] = compile_targeted(c);
    REQUIRE(circuits_equivalent(c, out, 1e-8));
    REQUIRE(rep.bound_met);
    REQUIRE(rep.global_gate_count == rep.rotation_gate_count + rep.clifford_gate_count);
    REQUIRE(rep.rotation_gate_count == rep.non_clifford_count - rep.weight1_rotations);
    REQUIRE(rep.clifford_gate_count <= std::max(0, 6 * n - 8));
  }
}
