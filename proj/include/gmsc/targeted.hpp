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

#pragma once

#include <set>
#include <utility>
#include <vector>

#include "gmsc/extract.hpp"
#include "gmsc/gf2.hpp"
#include "gmsc/normal_form.hpp"
#include "gmsc/report.hpp"

namespace gmsc {

/// Local-Clifford change of frame taking a Pauli string to the all-Z string
/// on its support: per qubit, X conjugates with H and Y with H.S^dagger.
struct BasisChange {
  std::vector<Gate> forward;  // time order
  std::vector<Gate> inverse;
  QubitSet support;
};

inline BasisChange basis_change(const PauliString& p) {
  if (p.weight() < 1) throw Error("basis change needs a non-identity string");
  BasisChange bc;
  bc.support = QubitSet(p.support());
  for (int q : bc.support) {
    switch (p.at(q)) {
      case Pauli::X:
        bc.forward.push_back(Gate::h(q));
        bc.inverse.push_back(Gate::h(q));
        break;
      case Pauli::Y:
        // V = H . S^dagger per qubit, so V^dagger = S . H; gates on distinct
        // qubits commute, so per-qubit ordering is all that matters.
        bc.forward.push_back(Gate::sdg(q));
        bc.forward.push_back(Gate::h(q));
        bc.inverse.push_back(Gate::h(q));
        bc.inverse.push_back(Gate::s(q));
        break;
      default:
        break;
    }
  }
  return bc;
}

/// One phase gadget exp(-i a/2 Z^S), synthesised with a single gcz up to
/// garbage Cliffords: emitted = [H(t), gcz(S), H(t), rz(t, a)] with the
/// fan-in residue H(t).gcz(S).H(t) as the garbage tableau (to be applied
/// after the emitted gates). Weight-1 gadgets are a bare rz and consume no
/// global gate.
struct GadgetSynthesis {
  std::vector<Gate> emitted;
  CliffordTableau garbage;
  int global_gates = 0;

  explicit GadgetSynthesis(int n) : garbage(CliffordTableau::identity(n)) {}
};

inline GadgetSynthesis synth_phase_gadget_with_target(const QubitSet& s, Angle a, int n, int t) {
  if (s.empty()) throw Error("phase gadget needs a non-empty support");
  if (!s.contains(t)) throw Error("ladder target must lie in the support");
  GadgetSynthesis g(n);
  if (s.size() == 1) {
    g.emitted.push_back(Gate::rz(t, a));
    return g;
  }
  g.emitted.push_back(Gate::h(t));
  g.emitted.push_back(Gate::gcz(s));
  g.emitted.push_back(Gate::h(t));
  g.emitted.push_back(Gate::rz(t, a));
  g.global_gates = 1;
  Circuit garbage_circ(n);
  garbage_circ.append(Gate::h(t));
  garbage_circ.append(Gate::gcz(s));
  garbage_circ.append(Gate::h(t));
  g.garbage = tableau_from_circuit(garbage_circ);
  return g;
}

inline GadgetSynthesis synth_phase_gadget(const QubitSet& s, Angle a, int n) {
  return synth_phase_gadget_with_target(s, a, n, s.min());
}

/// Greedy CZ-layer synthesis: for each qubit in ascending order, one gcz
/// over the qubit and its remaining CZ neighbourhood clears every pair
/// touching it; at most n-1 gcz gates come out and the residual is empty.
inline std::vector<Gate> synth_cz_layer(const std::set<std::pair<int, int>>& czs, int n) {
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [a, b] : czs) {
    if (a == b || a < 0 || b < 0 || a >= n || b >= n) throw Error("bad CZ pair");
    adj[a][b] = adj[b][a] ^= 1;
  }
  std::vector<Gate> out;
  for (int i = 0; i < n; ++i) {
    std::vector<int> nb;
    for (int j = i + 1; j < n; ++j)
      if (adj[i][j]) nb.push_back(j);
    if (nb.empty()) continue;
    std::vector<int> group = nb;
    group.push_back(i);
    QubitSet gs(std::move(group));
    out.push_back(Gate::gcz(gs));
    for (auto it = gs.begin(); it != gs.end(); ++it)
      for (auto jt = std::next(it); jt != gs.end(); ++jt) {
        adj[*it][*jt] ^= 1;
        adj[*jt][*it] ^= 1;
      }
    // the pass over qubit i must leave nothing attached to it or before it
    for (int k = 0; k <= i; ++k)
      for (int j = 0; j < n; ++j)
        if (adj[k][j]) throw Error("CZ-layer greedy invariant broken");
  }
  return out;
}

/// A fan-out (CNOTs with common control) as two gcz gates: conjugating by H
/// on the targets turns the CZ star plus its in-target completion into the
/// CNOT fan. Exact, no garbage; one gcz when there is a single target.
inline std::vector<Gate> synth_fanout(int control, const QubitSet& targets, int n) {
  if (targets.empty()) throw Error("fan-out needs at least one target");
  if (targets.contains(control)) throw Error("fan-out control cannot be a target");
  if (control < 0 || control >= n || targets.max() >= n) throw Error("qubit out of range");
  std::vector<Gate> out;
  for (int t : targets) out.push_back(Gate::h(t));
  out.push_back(Gate::gcz(targets.with(control)));
  if (targets.size() >= 2) out.push_back(Gate::gcz(targets));
  for (int t : targets) out.push_back(Gate::h(t));
  return out;
}

namespace detail {

// Fan-in stage: CNOTs from every source into the target, as
// [H(t), gcz(sources+t), gcz(sources), H(t)].
inline void emit_fanin_stage(std::vector<Gate>& out, const QubitSet& sources, int target) {
  out.push_back(Gate::h(target));
  out.push_back(Gate::gcz(sources.with(target)));
  if (sources.size() >= 2) out.push_back(Gate::gcz(sources));
  out.push_back(Gate::h(target));
}

inline bool single_qubit_commutes_with_global(const Gate& g, const Gate& global) {
  if (g.qubits.size() != 1) return false;
  int q = g.qubits[0];
  const auto& qs = global.qubits;
  if (!std::binary_search(qs.begin(), qs.end(), q)) return true;
  // diagonal single-qubit gates commute with gcz/gzz
  if (global.kind == GateKind::Gcz || global.kind == GateKind::Gzz)
    return g.kind == GateKind::S || g.kind == GateKind::Sdg || g.kind == GateKind::Z ||
           g.kind == GateKind::Rz;
  return false;
}

}  // namespace detail

/// Cancels or merges mutually-inverse global gates that are adjacent up to
/// single-qubit gates commuting with them. Exact rewrites only.
inline std::vector<Gate> peephole_merge_globals(std::vector<Gate> gates) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < gates.size(); ++i) {
      if (!gates[i].is_global()) continue;
      for (size_t j = i + 1; j < gates.size(); ++j) {
        const Gate& gj = gates[j];
        if (!gj.is_global()) {
          if (detail::single_qubit_commutes_with_global(gj, gates[i])) continue;
          break;
        }
        if (gj.kind != gates[i].kind || gj.qubits != gates[i].qubits) break;
        if (gates[i].kind == GateKind::Gcz) {
          gates.erase(gates.begin() + j);
          gates.erase(gates.begin() + i);
          changed = true;
        } else {
          Angle sum = gates[i].angle + gj.angle;
          gates.erase(gates.begin() + j);
          if (sum.is_zero()) {
            gates.erase(gates.begin() + i);
          } else {
            gates[i].angle = sum;
          }
          changed = true;
        }
        break;
      }
      if (changed) break;
    }
  }
  return gates;
}

/// CNOT-circuit synthesis from the matrix semantics: M = P L U over GF(2);
/// the permutation goes to the output relabeling, each triangular factor
/// becomes fan-in stages (at most 2n-3 gcz each), and a peephole pass merges
/// mutually-inverse globals across stage boundaries.
struct CnotSynthesis {
  Circuit circuit;
  int global_gates = 0;

  explicit CnotSynthesis(int n) : circuit(n) {}
};

inline CnotSynthesis synth_cnot_circuit(const GF2Matrix& m) {
  const int n = m.size();
  if (!m.is_invertible()) throw Error("singular CNOT matrix");
  CnotSynthesis r(n);
  PluDecomposition plu = plu_decompose(m);

  std::vector<Gate> gates;
  // time order: U first, then L, then the permutation as relabeling
  for (int i = 0; i < n; ++i) {
    std::vector<int> src;
    for (int j = i + 1; j < n; ++j)
      if (plu.upper.at(i, j)) src.push_back(j);
    if (!src.empty()) detail::emit_fanin_stage(gates, QubitSet(std::move(src)), i);
  }
  for (int i = n - 1; i >= 0; --i) {
    std::vector<int> src;
    for (int j = 0; j < i; ++j)
      if (plu.lower.at(i, j)) src.push_back(j);
    if (!src.empty()) detail::emit_fanin_stage(gates, QubitSet(std::move(src)), i);
  }
  gates = peephole_merge_globals(std::move(gates));
  r.circuit.append(gates);
  r.circuit.set_output_relabeling(plu.perm);
  r.global_gates = gms_count(r.circuit);
  return r;
}

/// Full Clifford synthesis through the normal form: two CZ layers at n-1
/// gcz each and one CNOT layer at 4n-6, so at most 6n-8 global gates.
struct CliffordSynthesis {
  Circuit circuit;
  int global_gates = 0;

  explicit CliffordSynthesis(int n) : circuit(n) {}
};

inline CliffordSynthesis synth_clifford(const CliffordTableau& t) {
  const int n = t.num_qubits();
  CliffordSynthesis out(n);
  NormalForm nf = extract_normal_form(t);

  std::vector<Gate> gates = layer_to_gates(nf.local0);
  auto czset = [](const std::vector<std::pair<int, int>>& v) {
    return std::set<std::pair<int, int>>(v.begin(), v.end());
  };
  auto append = [&gates](std::vector<Gate> gs) {
    gates.insert(gates.end(), gs.begin(), gs.end());
  };
  append(synth_cz_layer(czset(nf.cz1), n));
  append(layer_to_gates(nf.local1));

  CnotSynthesis cnot = synth_cnot_circuit(nf.cnot_matrix);
  append(cnot.circuit.gates);

  // Layers behind the CNOT block see its relabeling: remap their indices.
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  if (cnot.circuit.output_relabeling) perm = *cnot.circuit.output_relabeling;
  auto remap_layer = [&perm, n](const LocalCliffordLayer& l) {
    LocalCliffordLayer r(n);
    for (int q = 0; q < n; ++q) r[perm[q]] = l[q];
    return r;
  };
  append(layer_to_gates(remap_layer(nf.local2)));
  std::set<std::pair<int, int>> cz2;
  for (auto [a, b] : nf.cz2) {
    int pa = perm[a], pb = perm[b];
    cz2.insert({std::min(pa, pb), std::max(pa, pb)});
  }
  append(synth_cz_layer(cz2, n));
  append(layer_to_gates(remap_layer(nf.local3)));

  gates = peephole_merge_globals(std::move(gates));
  out.circuit.append(gates);
  if (cnot.circuit.output_relabeling)
    out.circuit.set_output_relabeling(*cnot.circuit.output_relabeling);
  out.global_gates = gms_count(out.circuit);
  return out;
}

namespace detail {

// Shared driver for both compilation modes. The GadgetEmitter returns the
// emitted gates, the garbage circuit (applied after, merged into the
// pending tableau) and the number of global gates spent.
template <typename GadgetEmitter, typename CliffordSynth>
std::pair<Circuit, SynthReport> compile_pipeline(const Circuit& c, CompileMode mode,
                                                 GadgetEmitter&& emit_gadget,
                                                 CliffordSynth&& synth_residual) {
  const int n = c.num_qubits;
  SynthReport report;
  report.n = n;
  report.mode = mode;
  report.non_clifford_count = count_non_clifford(c);

  ExtractedForm form = extract(c);
  Circuit out(n);
  CliffordTableau pending_garbage = CliffordTableau::identity(n);

  // Identity-string phases dropped by extraction count as needing no gate.
  report.weight1_rotations +=
      report.non_clifford_count - static_cast<int>(form.rotations.size());

  for (const PauliExp& rot : form.rotations) {
    PauliString p = pending_garbage.conj_through(rot.string);
    PauliExp conjugated(std::move(p), rot.angle);  // sign folds into the angle
    if (conjugated.string.weight() == 0) {
      ++report.weight1_rotations;
      continue;
    }
    if (conjugated.string.weight() == 1) ++report.weight1_rotations;

    BasisChange bc = basis_change(conjugated.string);
    out.append(bc.forward);
    auto [gadget_gates, garbage_core, spent] =
        emit_gadget(bc.support, conjugated.angle, bc.support.min());
    out.append(gadget_gates);
    out.append(bc.inverse);
    report.rotation_gate_count += spent;

    if (!garbage_core.gates.empty()) {
      Circuit garbage_circ(n);
      garbage_circ.append(bc.forward);
      garbage_circ.append(garbage_core.gates);
      garbage_circ.append(bc.inverse);
      pending_garbage = merge(pending_garbage, tableau_from_circuit(garbage_circ));
    }
  }

  CliffordTableau residual = merge(pending_garbage.inverse(), form.residual);
  auto [cliff_circuit, cliff_count] = synth_residual(residual);
  out.append(cliff_circuit.gates);
  if (cliff_circuit.output_relabeling)
    out.set_output_relabeling(*cliff_circuit.output_relabeling);
  out.gates = cancel_local_pairs(out.gates);
  report.clifford_gate_count = cliff_count;
  report.global_gate_count = gms_count(out);
  report.relabeling_used = out.output_relabeling.has_value();
  return {std::move(out), report};
}

}  // namespace detail

/// Compiles a Clifford+Phases circuit to targeted global gates: one gcz per
/// non-Clifford rotation of support >= 2, plus at most 6n-8 for the
/// residual Clifford, so at most N + 6n - 8 global gates in total.
inline std::pair<Circuit, SynthReport> compile_targeted(const Circuit& c) {
  const int n = c.num_qubits;
  struct GadgetOut {
    std::vector<Gate> gates;
    Circuit garbage;
    int spent;
  };
  auto emit = [n](const QubitSet& s, Angle a, int t) {
    GadgetOut g{{}, Circuit(n), 0};
    if (s.size() == 1) {
      g.gates.push_back(Gate::rz(t, a));
      return g;
    }
    g.gates = {Gate::h(t), Gate::gcz(s), Gate::h(t), Gate::rz(t, a)};
    g.garbage.append(Gate::h(t));
    g.garbage.append(Gate::gcz(s));
    g.garbage.append(Gate::h(t));
    g.spent = 1;
    return g;
  };
  auto synth = [](const CliffordTableau& t) {
    CliffordSynthesis cs = synth_clifford(t);
    return std::pair<Circuit, int>(cs.circuit, cs.global_gates);
  };
  auto [circ, report] = detail::compile_pipeline(c, CompileMode::Targeted, emit, synth);
  report.bound = report.non_clifford_count + std::max(0, 6 * n - 8);
  report.bound_met = report.global_gate_count <= report.bound;
  return {std::move(circ), report};
}

}  // namespace gmsc
