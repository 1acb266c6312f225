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

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "gmsc/error.hpp"
#include "gmsc/gate.hpp"

namespace gmsc {

/// Square Boolean matrix; the semantics of a CNOT-only circuit acting as
/// |x> -> |Mx> on bit columns.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  explicit GF2Matrix(int n) : n_(n), bits_(static_cast<size_t>(n) * n, 0) {}

  static GF2Matrix identity(int n) {
    GF2Matrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  int size() const { return n_; }
  bool at(int r, int c) const { return bits_[static_cast<size_t>(r) * n_ + c] != 0; }
  void set(int r, int c, bool v) { bits_[static_cast<size_t>(r) * n_ + c] = v ? 1 : 0; }
  void xor_row(int dst, int src) {
    for (int c = 0; c < n_; ++c)
      bits_[static_cast<size_t>(dst) * n_ + c] ^= bits_[static_cast<size_t>(src) * n_ + c];
  }
  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int c = 0; c < n_; ++c)
      std::swap(bits_[static_cast<size_t>(a) * n_ + c], bits_[static_cast<size_t>(b) * n_ + c]);
  }

  GF2Matrix transpose() const {
    GF2Matrix t(n_);
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) t.set(c, r, at(r, c));
    return t;
  }

  GF2Matrix multiply(const GF2Matrix& o) const {
    if (n_ != o.n_) throw Error("GF2 size mismatch");
    GF2Matrix r(n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k)
        if (at(i, k))
          for (int j = 0; j < n_; ++j)
            if (o.at(k, j)) r.set(i, j, !r.at(i, j));
    return r;
  }

  std::vector<std::uint8_t> apply(const std::vector<std::uint8_t>& x) const {
    std::vector<std::uint8_t> y(n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) y[i] ^= at(i, j) & x[j];
    return y;
  }

  int rank() const {
    GF2Matrix a = *this;
    int r = 0;
    for (int c = 0; c < n_ && r < n_; ++c) {
      int p = -1;
      for (int i = r; i < n_; ++i)
        if (a.at(i, c)) {
          p = i;
          break;
        }
      if (p < 0) continue;
      a.swap_rows(r, p);
      for (int i = 0; i < n_; ++i)
        if (i != r && a.at(i, c)) a.xor_row(i, r);
      ++r;
    }
    return r;
  }

  bool is_invertible() const { return rank() == n_; }

  GF2Matrix inverse() const {
    GF2Matrix a = *this;
    GF2Matrix inv = identity(n_);
    for (int c = 0; c < n_; ++c) {
      int p = -1;
      for (int i = c; i < n_; ++i)
        if (a.at(i, c)) {
          p = i;
          break;
        }
      if (p < 0) throw Error("singular GF2 matrix");
      a.swap_rows(c, p);
      inv.swap_rows(c, p);
      for (int i = 0; i < n_; ++i) {
        if (i != c && a.at(i, c)) {
          a.xor_row(i, c);
          inv.xor_row(i, c);
        }
      }
    }
    return inv;
  }

  bool is_upper_triangular() const {
    for (int r = 0; r < n_; ++r) {
      if (!at(r, r)) return false;
      for (int c = 0; c < r; ++c)
        if (at(r, c)) return false;
    }
    return true;
  }
  bool is_lower_triangular() const {
    for (int r = 0; r < n_; ++r) {
      if (!at(r, r)) return false;
      for (int c = r + 1; c < n_; ++c)
        if (at(r, c)) return false;
    }
    return true;
  }

  template <typename Rng>
  static GF2Matrix random_invertible(int n, Rng& rng) {
    while (true) {
      GF2Matrix m(n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.set(r, c, (rng() & 1) != 0);
      if (m.is_invertible()) return m;
    }
  }

  friend bool operator==(const GF2Matrix& a, const GF2Matrix& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  int n_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// M = P L U with P a row permutation (perm[i] = column of the 1 in row i of
/// P, so applying P maps bit vector x to y with y[i] = x[perm[i]]), L unit
/// lower triangular and U upper triangular.
struct PluDecomposition {
  std::vector<int> perm;
  GF2Matrix lower;
  GF2Matrix upper;
};

inline PluDecomposition plu_decompose(const GF2Matrix& m) {
  const int n = m.size();
  GF2Matrix a = m;
  GF2Matrix l = GF2Matrix::identity(n);
  std::vector<int> rows(n);  // rows[i] = original row now living at position i
  for (int i = 0; i < n; ++i) rows[i] = i;

  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (a.at(i, k)) {
        p = i;
        break;
      }
    if (p < 0) throw Error("singular GF2 matrix");
    a.swap_rows(k, p);
    std::swap(rows[k], rows[p]);
    // Keep L's already-filled columns aligned with the row order.
    for (int c = 0; c < k; ++c) {
      bool t = l.at(k, c);
      l.set(k, c, l.at(p, c));
      l.set(p, c, t);
    }
    for (int i = k + 1; i < n; ++i) {
      if (a.at(i, k)) {
        a.xor_row(i, k);
        l.set(i, k, true);
      }
    }
  }

  PluDecomposition r;
  r.lower = l;
  r.upper = a;
  // rows[] satisfies (P^-1 M) = L U with (P^-1)[i][rows[i]] = 1, i.e.
  // M = P L U where P[rows[i]][i] = 1. As a bit-vector map, P sends y to z
  // with z[rows[i]] = y[i], so z[j] = y[pos(j)] where pos inverts rows[].
  r.perm.assign(n, 0);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[rows[i]] = i;
  for (int j = 0; j < n; ++j) r.perm[j] = pos[j];
  return r;
}

/// CNOT gates realizing |x> -> |Mx> exactly (no relabeling). Gaussian
/// elimination with row additions only; the op list reversed is the circuit.
inline std::vector<Gate> cnot_gates_for(const GF2Matrix& m) {
  const int n = m.size();
  GF2Matrix a = m;
  std::vector<std::pair<int, int>> ops;  // (control, target) = row_target ^= row_control
  for (int c = 0; c < n; ++c) {
    if (!a.at(c, c)) {
      // A pivot below the diagonal always exists for invertible input, and
      // using one keeps the already-reduced columns intact.
      int p = -1;
      for (int i = c + 1; i < n; ++i)
        if (a.at(i, c)) {
          p = i;
          break;
        }
      if (p < 0) throw Error("singular GF2 matrix");
      a.xor_row(c, p);
      ops.emplace_back(p, c);
    }
    for (int i = 0; i < n; ++i) {
      if (i != c && a.at(i, c)) {
        a.xor_row(i, c);
        ops.emplace_back(c, i);
      }
    }
  }
  std::vector<Gate> gates;
  gates.reserve(ops.size());
  for (auto it = ops.rbegin(); it != ops.rend(); ++it)
    gates.push_back(Gate::cnot(it->first, it->second));
  return gates;
}

}  // namespace gmsc
