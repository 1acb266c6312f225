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

#include <utility>
#include <vector>

#include "gmsc/circuit.hpp"
#include "gmsc/pauli.hpp"

namespace gmsc {

/// Binary symplectic tableau of a Clifford unitary C, stored as the images
/// C X_i C^dagger and C Z_i C^dagger with sign bits. Conjugating rows gate
/// by gate composes circuits; the inverse tableau gives the backwards
/// conjugation C^dagger P C used to commute phase gates to the front.
class CliffordTableau {
 public:
  explicit CliffordTableau(int n) : n_(n) {
    if (n < 1) throw Error("tableau needs at least one qubit");
    x_rows_.reserve(n);
    z_rows_.reserve(n);
    for (int i = 0; i < n; ++i) {
      x_rows_.push_back(PauliString::single(n, i, Pauli::X));
      z_rows_.push_back(PauliString::single(n, i, Pauli::Z));
    }
  }

  static CliffordTableau identity(int n) { return CliffordTableau(n); }

  int num_qubits() const { return n_; }
  const PauliString& x_row(int i) const { return x_rows_.at(i); }
  const PauliString& z_row(int i) const { return z_rows_.at(i); }

  bool is_identity() const { return *this == CliffordTableau(n_); }

  friend bool operator==(const CliffordTableau& a, const CliffordTableau& b) {
    return a.n_ == b.n_ && a.x_rows_ == b.x_rows_ && a.z_rows_ == b.z_rows_;
  }

  /// Appends one Clifford gate to the represented circuit by conjugating
  /// every row. Non-Clifford gates are rejected.
  void apply_gate(const Gate& g) {
    if (!is_clifford_gate(g)) throw Error("non-Clifford gate in tableau path");
    switch (g.kind) {
      case GateKind::H: for_rows([&](PauliString& r) { row_h(r, g.qubit()); }); break;
      case GateKind::S: for_rows([&](PauliString& r) { row_s(r, g.qubit()); }); break;
      case GateKind::Sdg: for_rows([&](PauliString& r) { row_sdg(r, g.qubit()); }); break;
      case GateKind::X: for_rows([&](PauliString& r) { row_x(r, g.qubit()); }); break;
      case GateKind::Y: for_rows([&](PauliString& r) { row_y(r, g.qubit()); }); break;
      case GateKind::Z: for_rows([&](PauliString& r) { row_z(r, g.qubit()); }); break;
      case GateKind::Rz: {
        int k = clifford_quarter_turns(g.angle);
        for_rows([&](PauliString& r) {
          for (int t = 0; t < k; ++t) row_s(r, g.qubit());
        });
        break;
      }
      case GateKind::Cnot:
        for_rows([&](PauliString& r) { row_cnot(r, g.control(), g.target()); });
        break;
      case GateKind::Cz:
        for_rows([&](PauliString& r) { row_cz(r, g.qubits[0], g.qubits[1]); });
        break;
      case GateKind::Gcz: {
        const auto& qs = g.qubits;
        for_rows([&](PauliString& r) {
          for (size_t i = 0; i < qs.size(); ++i)
            for (size_t j = i + 1; j < qs.size(); ++j) row_cz(r, qs[i], qs[j]);
        });
        break;
      }
      case GateKind::Gzz: {
        int k = clifford_quarter_turns(g.angle);
        const auto& qs = g.qubits;
        for_rows([&](PauliString& r) {
          for (size_t i = 0; i < qs.size(); ++i)
            for (size_t j = i + 1; j < qs.size(); ++j) row_zz_quarter(r, qs[i], qs[j], k);
        });
        break;
      }
      case GateKind::Gms: {
        int k = clifford_quarter_turns(g.angle);
        const auto& qs = g.qubits;
        for_rows([&](PauliString& r) {
          for (int q : qs) row_h(r, q);
          for (size_t i = 0; i < qs.size(); ++i)
            for (size_t j = i + 1; j < qs.size(); ++j) row_zz_quarter(r, qs[i], qs[j], k);
          for (int q : qs) row_h(r, q);
        });
        break;
      }
      case GateKind::PauliExpGate: {
        int k = clifford_quarter_turns(g.pexp.angle);
        for_rows([&](PauliString& r) {
          for (int t = 0; t < k; ++t) row_pauli_quarter(r, g.pexp.string);
        });
        break;
      }
    }
  }

  /// Permutes the output side: C' = Perm . C for a relabeling where output
  /// wire i carries wire perm[i].
  void apply_relabeling(const std::vector<int>& perm) {
    std::vector<int> inv(n_);
    for (int i = 0; i < n_; ++i) inv[perm[i]] = i;
    for_rows([&](PauliString& r) {
      std::vector<Pauli> next(n_);
      for (int j = 0; j < n_; ++j) next[j] = r.paulis[perm[j]];
      r.paulis = std::move(next);
    });
  }

  /// C P C^dagger for a signed Pauli string.
  PauliString conj_through(const PauliString& p) const {
    if (p.size() != n_) throw Error("Pauli string length mismatch");
    // P = sign * i^y * prod_q X_q^x * prod_q Z_q^z, with y the Y count.
    int i_power = p.y_count() % 4;
    PauliString acc = PauliString::identity(n_);
    acc.sign = p.sign;
    for (int q = 0; q < n_; ++q)
      if (p.x_bit(q)) acc = pauli_string_mul(acc, x_rows_[q], i_power);
    for (int q = 0; q < n_; ++q)
      if (p.z_bit(q)) acc = pauli_string_mul(acc, z_rows_[q], i_power);
    if (i_power % 2 != 0) throw Error("conjugation produced a non-Hermitian phase");
    if (i_power == 2) acc.sign = -acc.sign;
    return acc;
  }

  /// The tableau of C^dagger. Bits come from the symplectic transpose; each
  /// sign is then fixed so the two tableaux compose to the identity.
  CliffordTableau inverse() const {
    CliffordTableau inv(n_);
    for (int i = 0; i < n_; ++i) {
      PauliString xr = PauliString::identity(n_);
      PauliString zr = PauliString::identity(n_);
      for (int p = 0; p < n_; ++p) {
        xr.paulis[p] = pauli_from_bits(z_rows_[p].z_bit(i), x_rows_[p].z_bit(i));
        zr.paulis[p] = pauli_from_bits(z_rows_[p].x_bit(i), x_rows_[p].x_bit(i));
      }
      inv.x_rows_[i] = fix_inverse_sign(std::move(xr), PauliString::single(n_, i, Pauli::X));
      inv.z_rows_[i] = fix_inverse_sign(std::move(zr), PauliString::single(n_, i, Pauli::Z));
    }
    return inv;
  }

  /// Commutation-preservation check over all generator pairs.
  bool is_valid() const {
    for (int i = 0; i < n_; ++i) {
      if (x_rows_[i].commutes_with(z_rows_[i])) return false;
      for (int j = i + 1; j < n_; ++j) {
        if (!x_rows_[i].commutes_with(x_rows_[j])) return false;
        if (!z_rows_[i].commutes_with(z_rows_[j])) return false;
        if (!x_rows_[i].commutes_with(z_rows_[j])) return false;
        if (!z_rows_[i].commutes_with(x_rows_[j])) return false;
      }
    }
    return true;
  }

  // Per-row conjugation rules (g r g^dagger); sign updates use the
  // pre-update bits. Public because layer extraction reuses them on
  // stabilizer rows.
  static void row_h(PauliString& r, int q) {
    bool x = r.x_bit(q), z = r.z_bit(q);
    if (x && z) r.sign = -r.sign;
    r.paulis[q] = pauli_from_bits(z, x);
  }
  static void row_s(PauliString& r, int q) {
    bool x = r.x_bit(q), z = r.z_bit(q);
    if (x && z) r.sign = -r.sign;
    if (x) r.paulis[q] = pauli_from_bits(x, !z);
  }
  static void row_sdg(PauliString& r, int q) {
    bool x = r.x_bit(q), z = r.z_bit(q);
    if (x && !z) r.sign = -r.sign;
    if (x) r.paulis[q] = pauli_from_bits(x, !z);
  }
  static void row_x(PauliString& r, int q) {
    if (r.z_bit(q)) r.sign = -r.sign;
  }
  static void row_y(PauliString& r, int q) {
    if (r.x_bit(q) != r.z_bit(q)) r.sign = -r.sign;
  }
  static void row_z(PauliString& r, int q) {
    if (r.x_bit(q)) r.sign = -r.sign;
  }
  static void row_cnot(PauliString& r, int c, int t) {
    bool xc = r.x_bit(c), zc = r.z_bit(c);
    bool xt = r.x_bit(t), zt = r.z_bit(t);
    if (xc && zt && (xt == zc)) r.sign = -r.sign;
    r.paulis[t] = pauli_from_bits(xt ^ xc, zt);
    r.paulis[c] = pauli_from_bits(xc, zc ^ zt);
  }
  static void row_cz(PauliString& r, int a, int b) {
    row_h(r, b);
    row_cnot(r, a, b);
    row_h(r, b);
  }
  // ZZ(pi/2) conjugates like S_a S_b CZ_ab (equal up to global phase).
  static void row_zz_quarter(PauliString& r, int a, int b, int k) {
    for (int t = 0; t < k; ++t) {
      row_s(r, a);
      row_s(r, b);
      row_cz(r, a, b);
    }
  }
  // exp(-i pi/4 P): rows anticommuting with P map to -i P r.
  static void row_pauli_quarter(PauliString& r, const PauliString& p) {
    if (r.commutes_with(p)) return;
    int ipow = 0;
    PauliString out = pauli_string_mul(p, r, ipow);
    ipow = (ipow + 3) % 4;  // the -i factor
    if (ipow % 2 != 0) throw Error("broken quarter-turn conjugation");
    if (ipow == 2) out.sign = -out.sign;
    r = std::move(out);
  }

 private:
  template <typename F>
  void for_rows(F&& f) {
    for (auto& r : x_rows_) f(r);
    for (auto& r : z_rows_) f(r);
  }

  PauliString fix_inverse_sign(PauliString row, const PauliString& target) const {
    PauliString image = conj_through(row);
    if (!image.same_paulis(target)) throw Error("tableau is not symplectic");
    if (image.sign != target.sign) row.sign = -row.sign;
    return row;
  }

  int n_;
  std::vector<PauliString> x_rows_, z_rows_;

  friend CliffordTableau merge(const CliffordTableau& t1, const CliffordTableau& t2);
};

/// Tableau of a circuit: per-gate tableaux composed in circuit order, with
/// the output relabeling applied last. Rejects non-Clifford gates.
inline CliffordTableau tableau_from_circuit(const Circuit& c) {
  CliffordTableau t(c.num_qubits);
  for (const Gate& g : c.gates) t.apply_gate(g);
  if (c.output_relabeling) t.apply_relabeling(*c.output_relabeling);
  return t;
}

/// C^dagger P C: conjugates a Pauli backwards through the Clifford, which is
/// how a phase gate commutes leftwards past it.
inline PauliString conjugate_back(const CliffordTableau& t, const PauliString& p) {
  return t.inverse().conj_through(p);
}

/// Exact Clifford equivalence (up to global phase) via tableau equality,
/// output relabelings included. Scales well past the dense-oracle cap.
inline bool tableau_equiv(const Circuit& a, const Circuit& b) {
  if (!is_clifford_circuit(a) || !is_clifford_circuit(b))
    throw Error("tableau equivalence needs Clifford-only circuits");
  if (a.num_qubits != b.num_qubits) return false;
  return tableau_from_circuit(a) == tableau_from_circuit(b);
}

/// Tableau of circuit(t1) followed by circuit(t2).
inline CliffordTableau merge(const CliffordTableau& t1, const CliffordTableau& t2) {
  if (t1.num_qubits() != t2.num_qubits()) throw Error("tableau size mismatch");
  int n = t1.num_qubits();
  CliffordTableau r(n);
  for (int i = 0; i < n; ++i) {
    r.x_rows_[i] = t2.conj_through(t1.x_row(i));
    r.z_rows_[i] = t2.conj_through(t1.z_row(i));
  }
  return r;
}

}  // namespace gmsc
