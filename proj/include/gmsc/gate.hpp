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
#include <initializer_list>
#include <string>
#include <vector>

#include "gmsc/angle.hpp"
#include "gmsc/error.hpp"
#include "gmsc/pauli.hpp"

namespace gmsc {

/// A sorted set of qubit indices.
class QubitSet {
 public:
  QubitSet() = default;
  QubitSet(std::initializer_list<int> qs) : elems_(qs) { normalize(); }
  explicit QubitSet(std::vector<int> qs) : elems_(std::move(qs)) { normalize(); }

  int size() const { return static_cast<int>(elems_.size()); }
  bool empty() const { return elems_.empty(); }
  bool contains(int q) const { return std::binary_search(elems_.begin(), elems_.end(), q); }
  int min() const {
    if (empty()) throw Error("min() of empty qubit set");
    return elems_.front();
  }
  int max() const {
    if (empty()) throw Error("max() of empty qubit set");
    return elems_.back();
  }

  QubitSet without(int q) const {
    QubitSet r = *this;
    r.elems_.erase(std::remove(r.elems_.begin(), r.elems_.end(), q), r.elems_.end());
    return r;
  }
  QubitSet with(int q) const {
    QubitSet r = *this;
    if (!r.contains(q)) {
      r.elems_.push_back(q);
      std::sort(r.elems_.begin(), r.elems_.end());
    }
    return r;
  }
  /// Qubits in {0..n-1} not in this set.
  QubitSet complement(int n) const {
    std::vector<int> r;
    for (int q = 0; q < n; ++q)
      if (!contains(q)) r.push_back(q);
    return QubitSet(std::move(r));
  }
  bool subset_of(const QubitSet& other) const {
    return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
  }

  const std::vector<int>& indices() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  friend bool operator==(const QubitSet& a, const QubitSet& b) { return a.elems_ == b.elems_; }

 private:
  void normalize() {
    std::sort(elems_.begin(), elems_.end());
    if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
      throw Error("duplicate qubit index in qubit set");
  }
  std::vector<int> elems_;
};

enum class GateKind : std::uint8_t {
  H,
  S,
  Sdg,
  X,
  Y,
  Z,
  Rz,
  Cnot,
  Cz,
  Gms,
  Gzz,
  Gcz,
  PauliExpGate,
};

inline const char* gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::Rz: return "rz";
    case GateKind::Cnot: return "cx";
    case GateKind::Cz: return "cz";
    case GateKind::Gms: return "gms";
    case GateKind::Gzz: return "gzz";
    case GateKind::Gcz: return "gcz";
    case GateKind::PauliExpGate: return "pauliexp";
  }
  return "?";
}

/// One gate of the IR. `qubits` holds {q} for single-qubit kinds,
/// {control, target} for cx (order matters), the sorted pair for cz and the
/// sorted target set for gms/gzz/gcz. Global gates on sets of size <= 1 are
/// the identity.
struct Gate {
  GateKind kind = GateKind::H;
  std::vector<int> qubits;
  Angle angle;     // rz, gms, gzz, pauliexp
  PauliExp pexp;   // pauliexp only

  static Gate h(int q) { return single(GateKind::H, q); }
  static Gate s(int q) { return single(GateKind::S, q); }
  static Gate sdg(int q) { return single(GateKind::Sdg, q); }
  static Gate x(int q) { return single(GateKind::X, q); }
  static Gate y(int q) { return single(GateKind::Y, q); }
  static Gate z(int q) { return single(GateKind::Z, q); }
  static Gate rz(int q, Angle a) {
    Gate g = single(GateKind::Rz, q);
    g.angle = a;
    return g;
  }
  static Gate cnot(int control, int target) {
    if (control == target) throw Error("cx control and target must differ");
    Gate g;
    g.kind = GateKind::Cnot;
    g.qubits = {control, target};
    return g;
  }
  static Gate cz(int a, int b) {
    if (a == b) throw Error("cz qubits must differ");
    Gate g;
    g.kind = GateKind::Cz;
    g.qubits = {std::min(a, b), std::max(a, b)};
    return g;
  }
  static Gate gms(QubitSet s, Angle a) { return global(GateKind::Gms, std::move(s), a); }
  static Gate gzz(QubitSet s, Angle a) { return global(GateKind::Gzz, std::move(s), a); }
  static Gate gcz(QubitSet s) { return global(GateKind::Gcz, std::move(s), Angle()); }
  static Gate pauli_exp(PauliExp pe) {
    Gate g;
    g.kind = GateKind::PauliExpGate;
    g.pexp = std::move(pe);
    return g;
  }

  int qubit() const { return qubits.at(0); }   // single-qubit kinds
  int control() const { return qubits.at(0); }  // cx
  int target() const { return qubits.at(1); }   // cx

  QubitSet qubit_set() const {
    if (kind == GateKind::PauliExpGate) return QubitSet(pexp.string.support());
    return QubitSet(qubits);
  }

  bool is_global() const {
    return kind == GateKind::Gms || kind == GateKind::Gzz || kind == GateKind::Gcz;
  }

  bool has_angle() const {
    return kind == GateKind::Rz || kind == GateKind::Gms || kind == GateKind::Gzz;
  }

  friend bool operator==(const Gate& a, const Gate& b) {
    return a.kind == b.kind && a.qubits == b.qubits && a.angle == b.angle && a.pexp == b.pexp;
  }

 private:
  static Gate single(GateKind k, int q) {
    Gate g;
    g.kind = k;
    g.qubits = {q};
    return g;
  }
  static Gate global(GateKind k, QubitSet s, Angle a) {
    Gate g;
    g.kind = k;
    g.qubits = s.indices();
    g.angle = a;
    return g;
  }
};

/// The inverse of a single gate.
inline Gate dagger_gate(const Gate& g) {
  switch (g.kind) {
    case GateKind::S: {
      Gate r = g;
      r.kind = GateKind::Sdg;
      return r;
    }
    case GateKind::Sdg: {
      Gate r = g;
      r.kind = GateKind::S;
      return r;
    }
    case GateKind::Rz:
    case GateKind::Gms:
    case GateKind::Gzz: {
      Gate r = g;
      r.angle = g.angle.negated();
      return r;
    }
    case GateKind::PauliExpGate: {
      Gate r = g;
      r.pexp = PauliExp(g.pexp.string, g.pexp.angle.negated());
      return r;
    }
    default:
      return g;  // h, x, y, z, cx, cz, gcz are self-inverse
  }
}

/// Whether a gate's unitary is Clifford.
inline bool is_clifford_gate(const Gate& g) {
  switch (g.kind) {
    case GateKind::Rz:
    case GateKind::Gms:
    case GateKind::Gzz:
      return is_clifford_angle(g.angle);
    case GateKind::PauliExpGate:
      return is_clifford_angle(g.pexp.angle);
    default:
      return true;
  }
}

}  // namespace gmsc
