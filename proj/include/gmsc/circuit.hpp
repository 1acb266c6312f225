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

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gmsc/gate.hpp"

namespace gmsc {

/// An ordered gate sequence over num_qubits qubits. Gate list index 0 acts
/// first. `output_relabeling`, when set, is a permutation applied after the
/// gates: output wire i carries what the gate list left on wire perm[i].
struct Circuit {
  int num_qubits = 0;
  std::vector<Gate> gates;
  std::optional<std::vector<int>> output_relabeling;

  Circuit() = default;
  explicit Circuit(int n) : num_qubits(n) {
    if (n <= 0) throw Error("circuit needs a positive qubit count");
  }

  void append(Gate g) {
    validate_gate(g);
    gates.push_back(std::move(g));
  }
  void append(const std::vector<Gate>& gs) {
    for (const Gate& g : gs) append(g);
  }

  void set_output_relabeling(std::vector<int> perm) {
    if (static_cast<int>(perm.size()) != num_qubits) throw Error("relabeling length mismatch");
    std::vector<bool> seen(num_qubits, false);
    for (int p : perm) {
      if (p < 0 || p >= num_qubits || seen[p]) throw Error("relabeling is not a permutation");
      seen[p] = true;
    }
    bool is_id = true;
    for (int i = 0; i < num_qubits; ++i) is_id = is_id && perm[i] == i;
    if (is_id)
      output_relabeling.reset();
    else
      output_relabeling = std::move(perm);
  }

  void validate_gate(const Gate& g) const {
    if (g.kind == GateKind::PauliExpGate) {
      if (g.pexp.string.size() != num_qubits)
        throw Error("pauli string length does not match circuit width");
      return;
    }
    for (size_t i = 0; i < g.qubits.size(); ++i) {
      int q = g.qubits[i];
      if (q < 0 || q >= num_qubits) throw Error("qubit index out of range");
      for (size_t j = i + 1; j < g.qubits.size(); ++j)
        if (g.qubits[j] == q) throw Error("repeated qubit index in gate");
    }
  }

  friend bool operator==(const Circuit& a, const Circuit& b) {
    return a.num_qubits == b.num_qubits && a.gates == b.gates &&
           a.output_relabeling == b.output_relabeling;
  }
};

/// Whether every gate is Clifford (relabelings are always Clifford).
inline bool is_clifford_circuit(const Circuit& c) {
  return std::all_of(c.gates.begin(), c.gates.end(),
                     [](const Gate& g) { return is_clifford_gate(g); });
}

/// Number of non-Clifford Z-phase gates. The circuit must contain only
/// Clifford gates and rz gates; anything else is rejected.
inline int count_non_clifford(const Circuit& c) {
  int n = 0;
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::Rz) {
      n += !is_clifford_angle(g.angle);
    } else if (g.kind == GateKind::PauliExpGate && !is_clifford_gate(g)) {
      n += 1;  // an exponentiated Pauli is a conjugated phase gate
    } else if (!is_clifford_gate(g)) {
      throw Error(std::string("unsupported non-Clifford gate: ") + gate_kind_name(g.kind));
    }
  }
  return n;
}

/// Count of global entangling gates (gms, gzz and gcz count uniformly; they
/// are interconvertible by local Cliffords).
inline int gms_count(const Circuit& c) {
  int n = 0;
  for (const Gate& g : c.gates) n += g.is_global();
  return n;
}

/// Per-kind gate histogram.
inline std::map<std::string, int> gate_histogram(const Circuit& c) {
  std::map<std::string, int> h;
  for (const Gate& g : c.gates) h[gate_kind_name(g.kind)]++;
  return h;
}

/// Plain circuit depth: the longest chain of gates sharing qubits.
inline int circuit_depth(const Circuit& c) {
  std::vector<int> level(c.num_qubits, 0);
  int depth = 0;
  for (const Gate& g : c.gates) {
    QubitSet qs = g.qubit_set();
    if (qs.empty()) continue;
    int l = 0;
    for (int q : qs) l = std::max(l, level[q]);
    ++l;
    for (int q : qs) level[q] = l;
    depth = std::max(depth, l);
  }
  return depth;
}

/// The inverse circuit: reversed gate order, each gate inverted. A pending
/// output relabeling is inverted and applied the same way.
inline Circuit dagger(const Circuit& c) {
  Circuit r(c.num_qubits);
  if (c.output_relabeling) {
    // Undo the permutation first: the inverse relabeling becomes a leading
    // relabeling, which we fold into gate indices instead of keeping a
    // second permutation slot. Compiled circuits are inverted before any
    // relabeling is attached, so keep this path simple and explicit.
    std::vector<int> inv(c.num_qubits);
    for (int i = 0; i < c.num_qubits; ++i) inv[(*c.output_relabeling)[i]] = i;
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
      Gate g = dagger_gate(*it);
      for (int& q : g.qubits) q = inv[q];
      if (g.kind == GateKind::Cz || g.is_global()) std::sort(g.qubits.begin(), g.qubits.end());
      r.append(std::move(g));
    }
    r.set_output_relabeling(inv);
    return r;
  }
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) r.append(dagger_gate(*it));
  return r;
}

/// CZ on every pair of S, written with one gzz gate:
/// gzz(S, pi/2) followed by (|S|-1) s-dagger turns on each qubit of S.
/// Empty for |S| < 2.
inline std::vector<Gate> gcz_as_gzz(const QubitSet& s) {
  std::vector<Gate> out;
  if (s.size() < 2) return out;
  out.push_back(Gate::gzz(s, Angle(kPi / 2.0)));
  int k = (s.size() - 1) % 4;  // sdg^k per qubit, written as the short form
  for (int q : s) {
    switch (k) {
      case 0: break;
      case 1: out.push_back(Gate::sdg(q)); break;
      case 2: out.push_back(Gate::z(q)); break;
      case 3: out.push_back(Gate::s(q)); break;
    }
  }
  return out;
}

/// gzz(S, a) as a gms gate conjugated by Hadamards on S. Exact equality.
inline std::vector<Gate> gzz_as_gms(const QubitSet& s, Angle a) {
  std::vector<Gate> out;
  if (s.empty()) return out;
  for (int q : s) out.push_back(Gate::h(q));
  out.push_back(Gate::gms(s, a));
  for (int q : s) out.push_back(Gate::h(q));
  return out;
}

/// Drops adjacent mutually-inverse single-qubit Clifford pairs (adjacent on
/// their wire: nothing else touched the qubit in between). Global gates are
/// untouched, so all gate-count audits survive this pass.
inline std::vector<Gate> cancel_local_pairs(const std::vector<Gate>& gates) {
  auto inverse_pair = [](const Gate& a, const Gate& b) {
    if (a.qubits != b.qubits) return false;
    switch (a.kind) {
      case GateKind::H:
      case GateKind::X:
      case GateKind::Y:
      case GateKind::Z:
        return b.kind == a.kind;
      case GateKind::S:
        return b.kind == GateKind::Sdg;
      case GateKind::Sdg:
        return b.kind == GateKind::S;
      default:
        return false;
    }
  };
  std::vector<Gate> out;
  std::vector<std::vector<size_t>> pending;  // per-qubit stack of indices in out
  std::vector<bool> removed;
  auto width = [&pending](int q) {
    if (q >= static_cast<int>(pending.size())) pending.resize(q + 1);
    return q;
  };
  for (const Gate& g : gates) {
    bool local_clifford = g.qubits.size() == 1 && g.kind != GateKind::Rz &&
                          g.kind != GateKind::Cnot && !g.is_global();
    if (local_clifford) {
      int q = width(g.qubit());
      if (!pending[q].empty() && inverse_pair(out[pending[q].back()], g)) {
        removed[pending[q].back()] = true;
        pending[q].pop_back();
        continue;
      }
      pending[q].push_back(out.size());
      out.push_back(g);
      removed.push_back(false);
      continue;
    }
    for (int q : g.qubit_set()) pending[width(q)].clear();
    out.push_back(g);
    removed.push_back(false);
  }
  std::vector<Gate> kept;
  kept.reserve(out.size());
  for (size_t i = 0; i < out.size(); ++i)
    if (!removed[i]) kept.push_back(std::move(out[i]));
  return kept;
}

/// Rewrites gzz and gcz gates to gms plus local Cliffords, leaving the
/// global-gate count unchanged.
inline Circuit lower_to_gms(const Circuit& c) {
  Circuit r(c.num_qubits);
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::Gzz:
        r.append(gzz_as_gms(g.qubit_set(), g.angle));
        break;
      case GateKind::Gcz: {
        // gcz -> gzz(pi/2) + local, then gzz -> gms.
        for (const Gate& gg : gcz_as_gzz(g.qubit_set())) {
          if (gg.kind == GateKind::Gzz)
            r.append(gzz_as_gms(gg.qubit_set(), gg.angle));
          else
            r.append(gg);
        }
        break;
      }
      default:
        r.append(g);
    }
  }
  r.output_relabeling = c.output_relabeling;
  return r;
}

}  // namespace gmsc
