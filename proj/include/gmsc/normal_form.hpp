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

#include "gmsc/gf2.hpp"
#include "gmsc/local_clifford.hpp"
#include "gmsc/tableau.hpp"

namespace gmsc {

/// Layered form of a Clifford: local / CZ / local / CNOT / local / CZ /
/// local, in time order. Exactly two CZ layers and one CNOT layer carry all
/// the entanglement; each CZ layer holds at most one CZ per pair and the
/// CNOT layer is an invertible linear map.
struct NormalForm {
  int n = 0;
  LocalCliffordLayer local0;
  std::vector<std::pair<int, int>> cz1;
  LocalCliffordLayer local1;
  std::vector<Gate> cnot_gates;
  GF2Matrix cnot_matrix;
  LocalCliffordLayer local2;
  std::vector<std::pair<int, int>> cz2;
  LocalCliffordLayer local3;

  Circuit to_circuit() const {
    Circuit c(n);
    c.append(layer_to_gates(local0));
    for (auto [a, b] : cz1) c.append(Gate::cz(a, b));
    c.append(layer_to_gates(local1));
    c.append(cnot_gates);
    c.append(layer_to_gates(local2));
    for (auto [a, b] : cz2) c.append(Gate::cz(a, b));
    c.append(layer_to_gates(local3));
    return c;
  }
};

namespace detail {

inline LocalCliffordLayer identity_layer(int n) {
  return LocalCliffordLayer(n, LocalClifford::identity());
}

// Row-reduce the X block of the stabilizer rows (full Gauss-Jordan with
// sign-tracked generator products). Returns the pivot columns.
inline std::vector<int> x_block_rref(std::vector<PauliString>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < n && r < n; ++c) {
    int p = -1;
    for (int i = r; i < n; ++i)
      if (rows[i].x_bit(c)) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[r], rows[p]);
    for (int i = 0; i < n; ++i)
      if (i != r && rows[i].x_bit(c)) rows[i] = pauli_string_mul(rows[i], rows[r]);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

/// Decomposes a Clifford tableau into the layered normal form. The state
/// C|0..0> is first brought to graph-state form (fixing the trailing local /
/// CZ / local layers); what remains fixes |0..0> and therefore splits into a
/// CNOT layer against a diagonal CZ-plus-phases layer.
inline NormalForm extract_normal_form(const CliffordTableau& t) {
  const int n = t.num_qubits();
  NormalForm nf;
  nf.n = n;

  // Stabilizer generators of C|0^n>.
  std::vector<PauliString> rows;
  rows.reserve(n);
  for (int i = 0; i < n; ++i) rows.push_back(t.z_row(i));

  // Make the X block invertible with Hadamards on the non-pivot columns.
  std::vector<int> pivots = detail::x_block_rref(rows);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> h_qubits;
  for (int q = 0; q < n; ++q)
    if (!is_pivot[q]) h_qubits.push_back(q);
  for (int q : h_qubits)
    for (auto& row : rows) CliffordTableau::row_h(row, q);

  pivots = detail::x_block_rref(rows);
  if (static_cast<int>(pivots.size()) != n) throw Error("stabilizer X block not full rank");
  // Full RREF with all pivots present leaves the X block equal to identity.

  // Clear Y letters on the diagonal with S^dagger, then signs with Z.
  std::vector<bool> s_corr(n, false), z_corr(n, false);
  for (int q = 0; q < n; ++q) {
    if (rows[q].z_bit(q)) {
      s_corr[q] = true;
      for (auto& row : rows) CliffordTableau::row_sdg(row, q);
    }
  }
  for (int q = 0; q < n; ++q) {
    if (rows[q].sign < 0) {
      z_corr[q] = true;
      for (auto& row : rows) CliffordTableau::row_z(row, q);
    }
  }

  // The rows are now the generators X_i Z^{G_i} of a graph state.
  for (int i = 0; i < n; ++i) {
    if (rows[i].sign < 0) throw Error("graph-state reduction left a sign");
    for (int j = 0; j < n; ++j) {
      if (rows[i].x_bit(j) != (i == j)) throw Error("graph-state reduction failed");
      if (rows[i].z_bit(j) != rows[j].z_bit(i)) throw Error("graph adjacency not symmetric");
    }
    if (rows[i].z_bit(i)) throw Error("graph adjacency has a diagonal entry");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rows[i].z_bit(j)) nf.cz2.emplace_back(i, j);

  // local3 = H_Q S_D Z_F per qubit (the corrections, undone).
  nf.local3 = detail::identity_layer(n);
  for (int q = 0; q < n; ++q) {
    LocalClifford e = LocalClifford::identity();
    if (z_corr[q]) e = compose(local_clifford_of_kind(GateKind::Z), e);
    if (s_corr[q]) e = compose(local_clifford_of_kind(GateKind::S), e);
    if (!is_pivot[q]) e = compose(local_clifford_of_kind(GateKind::H), e);
    nf.local3[q] = e;
  }
  nf.local2 = detail::identity_layer(n);
  for (int q = 0; q < n; ++q) nf.local2[q] = local_clifford_of_kind(GateKind::H);

  // W = local2 ; cz2 ; local3 (time order) maps |0^n> to C|0^n>.
  Circuit w(n);
  w.append(layer_to_gates(nf.local2));
  for (auto [a, b] : nf.cz2) w.append(Gate::cz(a, b));
  w.append(layer_to_gates(nf.local3));
  CliffordTableau rem = merge(t, tableau_from_circuit(w).inverse());

  // rem fixes |0^n>: its Z images are +Z^{v_i} with V invertible.
  GF2Matrix v(n);
  for (int i = 0; i < n; ++i) {
    const PauliString& zr = rem.z_row(i);
    if (zr.sign < 0) throw Error("remainder does not fix the all-zero state");
    for (int j = 0; j < n; ++j) {
      if (zr.x_bit(j)) throw Error("remainder is not Z-preserving");
      v.set(i, j, zr.z_bit(j));
    }
  }
  // The CNOT layer must map Z_i back onto Z^{v_i}: L^T v_i = e_i, so L is
  // the inverse of V.
  nf.cnot_matrix = v.inverse();
  nf.cnot_gates = cnot_gates_for(nf.cnot_matrix);
  CliffordTableau d = merge(rem, tableau_from_circuit([&] {
                              Circuit nc(n);
                              nc.append(nf.cnot_gates);
                              return nc;
                            }()).inverse());

  // d is diagonal: Z_i -> Z_i and X_i -> +/- X_i Z^{c_i}; read off the CZ
  // layer, S powers and Z signs.
  std::vector<bool> s_pow(n, false);
  for (int i = 0; i < n; ++i) {
    if (!(d.z_row(i) == PauliString::single(n, i, Pauli::Z)))
      throw Error("diagonal remainder has a nontrivial Z action");
    const PauliString& xr = d.x_row(i);
    for (int j = 0; j < n; ++j)
      if (xr.x_bit(j) != (i == j)) throw Error("diagonal remainder mixes X letters");
    s_pow[i] = xr.z_bit(i);
    for (int j = i + 1; j < n; ++j) {
      if (xr.z_bit(j) != d.x_row(j).z_bit(i)) throw Error("CZ block not symmetric");
      if (xr.z_bit(j)) nf.cz1.emplace_back(i, j);
    }
  }
  Circuit cand(n);
  for (auto [a, b] : nf.cz1) cand.append(Gate::cz(a, b));
  for (int q = 0; q < n; ++q)
    if (s_pow[q]) cand.append(Gate::s(q));
  CliffordTableau dc = tableau_from_circuit(cand);
  nf.local0 = detail::identity_layer(n);
  nf.local1 = detail::identity_layer(n);
  for (int q = 0; q < n; ++q) {
    LocalClifford e = LocalClifford::identity();
    if (s_pow[q]) e = local_clifford_of_kind(GateKind::S);
    if (dc.x_row(q).sign != d.x_row(q).sign)
      e = compose(local_clifford_of_kind(GateKind::Z), e);
    nf.local1[q] = e;
  }

  // Collapse local layers across empty entangling layers so that trivial
  // inputs come out trivial.
  if (nf.cz2.empty()) {
    for (int q = 0; q < n; ++q) nf.local2[q] = compose(nf.local3[q], nf.local2[q]);
    nf.local3 = detail::identity_layer(n);
  }
  if (nf.cnot_gates.empty()) {
    for (int q = 0; q < n; ++q) nf.local1[q] = compose(nf.local2[q], nf.local1[q]);
    nf.local2 = detail::identity_layer(n);
  }
  if (nf.cz1.empty()) {
    for (int q = 0; q < n; ++q) nf.local0[q] = compose(nf.local1[q], nf.local0[q]);
    nf.local1 = detail::identity_layer(n);
  }
  return nf;
}

}  // namespace gmsc
