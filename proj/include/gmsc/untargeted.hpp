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

#include <bit>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "gmsc/targeted.hpp"

namespace gmsc {

/// Both sides of the splitting identity
///   gzz_Q(a) . X_S . gzz_Q(a) . X_S  =  gzz_{Q\S}(2a) . gzz_S(2a)
/// as gate sequences. Size-0/1 factors on the right are the identity and
/// are dropped.
inline std::pair<std::vector<Gate>, std::vector<Gate>> gzz_split(const QubitSet& q,
                                                                 const QubitSet& s, Angle a) {
  if (!s.subset_of(q)) throw Error("X set must be a subset of the gzz set");
  std::vector<Gate> lhs;
  auto x_layer = [&lhs, &s]() {
    for (int i : s) lhs.push_back(Gate::x(i));
  };
  if (q.size() >= 2) lhs.push_back(Gate::gzz(q, a));
  x_layer();
  if (q.size() >= 2) lhs.push_back(Gate::gzz(q, a));
  x_layer();

  std::vector<Gate> rhs;
  QubitSet rest = [&] {
    std::vector<int> r;
    for (int i : q)
      if (!s.contains(i)) r.push_back(i);
    return QubitSet(std::move(r));
  }();
  if (rest.size() >= 2) rhs.push_back(Gate::gzz(rest, a.doubled()));
  if (s.size() >= 2) rhs.push_back(Gate::gzz(s, a.doubled()));
  return {std::move(lhs), std::move(rhs)};
}

/// One all-qubit gzz sandwiched by an X layer.
struct UntargetedStep {
  QubitSet x_layer;
  Angle gzz_angle;
};

/// A sequence of uniform-angle untargeted steps realizing ZZ(b) on a set of
/// disjoint pairs. The step count is 2^ceil(log2(n - #pairs)): paired qubits
/// share a Walsh sign row, unpaired qubits get distinct rows, so every
/// unwanted pair cancels and every wanted pair accumulates the full angle.
struct Schedule {
  int num_qubits = 0;
  std::vector<UntargetedStep> steps;
  std::vector<std::pair<std::pair<int, int>, Angle>> realized_pairs;

  std::vector<Gate> to_gates() const {
    std::vector<Gate> out;
    QubitSet all = QubitSet().complement(num_qubits);
    for (const UntargetedStep& st : steps) {
      for (int q : st.x_layer) out.push_back(Gate::x(q));
      out.push_back(Gate::gzz(all, st.gzz_angle));
      for (int q : st.x_layer) out.push_back(Gate::x(q));
    }
    return out;
  }
};

inline Schedule schedule_parallel_gzz(int n, const std::set<std::pair<int, int>>& pairs,
                                      Angle b) {
  if (n < 2) throw Error("untargeted scheduling needs n >= 2");
  Schedule sched;
  sched.num_qubits = n;
  if (pairs.empty()) return sched;

  std::vector<int> row(n, -1);
  int next_row = 0;
  for (auto [a, bq] : pairs) {
    if (a < 0 || bq < 0 || a >= n || bq >= n || a == bq) throw Error("bad qubit pair");
    if (row[a] != -1 || row[bq] != -1) throw Error("overlapping pairs");
    row[a] = row[bq] = next_row++;
  }
  for (int q = 0; q < n; ++q)
    if (row[q] == -1) row[q] = next_row++;

  int m = 0;
  while ((1 << m) < next_row) ++m;
  const int steps = 1 << m;
  Angle base = b;
  for (int i = 0; i < m; ++i) base = base.half();

  for (int t = 0; t < steps; ++t) {
    UntargetedStep st;
    st.gzz_angle = base;
    std::vector<int> flips;
    for (int q = 0; q < n; ++q)
      if (std::popcount(static_cast<unsigned>(row[q] & t)) % 2 == 1) flips.push_back(q);
    st.x_layer = QubitSet(std::move(flips));
    sched.steps.push_back(std::move(st));
  }
  for (auto p : pairs) sched.realized_pairs.push_back({p, b});
  return sched;
}

/// gcz(S) out of a pair of untargeted gzz(pi/4) gates with X on S, plus the
/// s-dagger corrections. The leftover gzz(pi/2) on the complement comes back
/// as a Clifford byproduct (absent when the complement has fewer than two
/// qubits).
struct UntargetedGcz {
  std::vector<Gate> gates;
  std::optional<Gate> byproduct;
};

inline UntargetedGcz gcz_from_untargeted(const QubitSet& s, int n) {
  if (s.size() < 2) throw Error("gcz needs at least two qubits");
  if (s.max() >= n) throw Error("qubit out of range");
  UntargetedGcz out;
  QubitSet all = QubitSet().complement(n);
  const Angle quarter(kPi / 4.0);
  out.gates.push_back(Gate::gzz(all, quarter));
  for (int q : s) out.gates.push_back(Gate::x(q));
  out.gates.push_back(Gate::gzz(all, quarter));
  for (int q : s) out.gates.push_back(Gate::x(q));
  // gzz_S(pi/2) = gcz(S) . S^(|S|-1) on each qubit of S; cancel the powers.
  int k = (s.size() - 1) % 4;
  for (int q : s) {
    switch (k) {
      case 0: break;
      case 1: out.gates.push_back(Gate::sdg(q)); break;
      case 2: out.gates.push_back(Gate::z(q)); break;
      case 3: out.gates.push_back(Gate::s(q)); break;
    }
  }
  QubitSet rest = s.complement(n);
  if (rest.size() >= 2) out.byproduct = Gate::gzz(rest, Angle(kPi / 2.0));
  return out;
}

namespace detail {

// Disjoint layers of a CNOT list, earliest-slot greedy; gates on disjoint
// qubits commute so the layered order is equivalent.
inline std::vector<std::vector<Gate>> layer_cnots(const std::vector<Gate>& cnots, int n) {
  std::vector<std::vector<Gate>> layers;
  std::vector<int> busy(n, -1);  // last layer touching each qubit
  for (const Gate& g : cnots) {
    int slot = std::max(busy[g.control()], busy[g.target()]) + 1;
    if (slot == static_cast<int>(layers.size())) layers.emplace_back();
    layers[slot].push_back(g);
    busy[g.control()] = busy[g.target()] = slot;
  }
  return layers;
}

// One layer of disjoint CNOTs via a parallel-ZZ schedule:
// CNOT(c,t) = H(t) CZ(c,t) H(t) and CZ = ZZ(pi/2) with S^dagger on both.
inline std::vector<Gate> lower_cnot_layer(const std::vector<Gate>& layer, int n, int* steps) {
  std::vector<Gate> out;
  std::set<std::pair<int, int>> zz_pairs;
  for (const Gate& g : layer)
    zz_pairs.insert({std::min(g.control(), g.target()), std::max(g.control(), g.target())});
  for (const Gate& g : layer) out.push_back(Gate::h(g.target()));
  Schedule sched = schedule_parallel_gzz(n, zz_pairs, Angle(kPi / 2.0));
  auto sg = sched.to_gates();
  out.insert(out.end(), sg.begin(), sg.end());
  for (const Gate& g : layer) {
    out.push_back(Gate::sdg(g.control()));
    out.push_back(Gate::sdg(g.target()));
  }
  for (const Gate& g : layer) out.push_back(Gate::h(g.target()));
  if (steps) *steps += static_cast<int>(sched.steps.size());
  return out;
}

}  // namespace detail

/// CNOT-circuit synthesis with untargeted gates: the CNOT list is layered
/// into depth-d slices of disjoint gates, each slice costs at most 2^k
/// all-qubit gzz gates where k is minimal with n-1 <= 2^k.
struct UntargetedCnotSynthesis {
  Circuit circuit;
  int untargeted_gates = 0;
  int depth = 0;
  int k = 0;

  explicit UntargetedCnotSynthesis(int n) : circuit(n) {}
};

inline UntargetedCnotSynthesis synth_cnot_untargeted(const GF2Matrix& m) {
  const int n = m.size();
  if (!m.is_invertible()) throw Error("singular CNOT matrix");
  UntargetedCnotSynthesis out(n);
  while ((1 << out.k) < n - 1) ++out.k;
  std::vector<Gate> cnots = cnot_gates_for(m);
  auto layers = detail::layer_cnots(cnots, n);
  out.depth = static_cast<int>(layers.size());
  for (const auto& layer : layers)
    out.circuit.append(detail::lower_cnot_layer(layer, n, &out.untargeted_gates));
  return out;
}

/// Residual Clifford with untargeted gates: normal-form layers where each CZ
/// layer is split into matchings scheduled as parallel ZZ(pi/2), and the
/// CNOT layer goes through synth_cnot_untargeted.
inline std::pair<Circuit, int> synth_clifford_untargeted(const CliffordTableau& t) {
  const int n = t.num_qubits();
  Circuit out(n);
  int count = 0;
  NormalForm nf = extract_normal_form(t);

  auto lower_cz_layer = [&](const std::vector<std::pair<int, int>>& czs) {
    std::set<std::pair<int, int>> remaining(czs.begin(), czs.end());
    while (!remaining.empty()) {
      // greedy matching
      std::set<std::pair<int, int>> matching;
      std::vector<bool> used(n, false);
      for (auto it = remaining.begin(); it != remaining.end();) {
        auto [a, b] = *it;
        if (!used[a] && !used[b]) {
          matching.insert(*it);
          used[a] = used[b] = true;
          it = remaining.erase(it);
        } else {
          ++it;
        }
      }
      Schedule sched = schedule_parallel_gzz(n, matching, Angle(kPi / 2.0));
      out.append(sched.to_gates());
      count += static_cast<int>(sched.steps.size());
      for (auto [a, b] : matching) {
        out.append(Gate::sdg(a));
        out.append(Gate::sdg(b));
      }
    }
  };

  out.append(layer_to_gates(nf.local0));
  lower_cz_layer(nf.cz1);
  out.append(layer_to_gates(nf.local1));
  UntargetedCnotSynthesis cnot = synth_cnot_untargeted(nf.cnot_matrix);
  out.append(cnot.circuit.gates);
  count += cnot.untargeted_gates;
  out.append(layer_to_gates(nf.local2));
  lower_cz_layer(nf.cz2);
  out.append(layer_to_gates(nf.local3));
  return {std::move(out), count};
}

/// Compiles a Clifford+Phases circuit to untargeted (all-qubit) global
/// gates: two gzz(pi/4) per rotation of support >= 2 with the complement
/// byproduct pushed into the residual, which is then synthesised through
/// the untargeted normal-form path, for 2N plus an N-independent f(n).
inline std::pair<Circuit, SynthReport> compile_untargeted(const Circuit& c) {
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
    UntargetedGcz u = gcz_from_untargeted(s, n);
    g.gates.push_back(Gate::h(t));
    g.gates.insert(g.gates.end(), u.gates.begin(), u.gates.end());
    g.gates.push_back(Gate::h(t));
    g.gates.push_back(Gate::rz(t, a));
    g.spent = 2;
    if (u.byproduct) g.garbage.append(*u.byproduct);
    g.garbage.append(Gate::h(t));
    g.garbage.append(Gate::gcz(s));
    g.garbage.append(Gate::h(t));
    return g;
  };
  auto synth = [](const CliffordTableau& t) { return synth_clifford_untargeted(t); };
  auto [circ, report] = detail::compile_pipeline(c, CompileMode::Untargeted, emit, synth);
  report.bound = 2LL * report.non_clifford_count + report.clifford_gate_count;
  report.bound_met = report.global_gate_count <= report.bound;
  return {std::move(circ), report};
}

}  // namespace gmsc
