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

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "gmsc/circuit.hpp"

namespace gmsc {

inline constexpr int kMaxDenseQubits = 12;

/// Dense 2^n x 2^n unitary, row-major. Basis convention: bit q of a basis
/// index holds qubit q, so qubit 0 is the least significant bit. Gates are
/// applied by left-multiplication, matching "gate list index 0 acts first".
class DenseUnitary {
 public:
  using cplx = std::complex<double>;

  explicit DenseUnitary(int num_qubits)
      : n_(num_qubits), dim_(static_cast<size_t>(1) << num_qubits), m_(dim_ * dim_) {
    if (num_qubits < 1 || num_qubits > kMaxDenseQubits)
      throw Error("dense oracle supports 1.." + std::to_string(kMaxDenseQubits) + " qubits");
    for (size_t i = 0; i < dim_; ++i) m_[i * dim_ + i] = 1.0;
  }

  int num_qubits() const { return n_; }
  size_t dim() const { return dim_; }
  cplx at(size_t r, size_t c) const { return m_[r * dim_ + c]; }
  cplx& at(size_t r, size_t c) { return m_[r * dim_ + c]; }

  /// Left-multiply by a single-qubit gate g (2x2, row-major) on qubit q.
  void apply_single(int q, const cplx g[4]) {
    const size_t mask = static_cast<size_t>(1) << q;
    for (size_t r0 = 0; r0 < dim_; ++r0) {
      if (r0 & mask) continue;
      const size_t r1 = r0 | mask;
      cplx* row0 = &m_[r0 * dim_];
      cplx* row1 = &m_[r1 * dim_];
      for (size_t c = 0; c < dim_; ++c) {
        cplx a = row0[c], b = row1[c];
        row0[c] = g[0] * a + g[1] * b;
        row1[c] = g[2] * a + g[3] * b;
      }
    }
  }

  void apply_h(int q) {
    const double s = 1.0 / std::sqrt(2.0);
    const cplx g[4] = {s, s, s, -s};
    apply_single(q, g);
  }
  void apply_x(int q) {
    const cplx g[4] = {0, 1, 1, 0};
    apply_single(q, g);
  }
  void apply_y(int q) {
    const cplx g[4] = {0, cplx(0, -1), cplx(0, 1), 0};
    apply_single(q, g);
  }
  /// diag(1, f) on qubit q.
  void apply_phase(int q, cplx f) {
    const size_t mask = static_cast<size_t>(1) << q;
    for (size_t r = 0; r < dim_; ++r)
      if (r & mask) scale_row(r, f);
  }
  void apply_z(int q) { apply_phase(q, -1.0); }
  void apply_s(int q) { apply_phase(q, cplx(0, 1)); }
  void apply_sdg(int q) { apply_phase(q, cplx(0, -1)); }
  void apply_rz(int q, double a) {
    const cplx g[4] = {std::polar(1.0, -a / 2), 0, 0, std::polar(1.0, a / 2)};
    apply_single(q, g);
  }

  void apply_cnot(int control, int target) {
    const size_t cm = static_cast<size_t>(1) << control;
    const size_t tm = static_cast<size_t>(1) << target;
    for (size_t r = 0; r < dim_; ++r) {
      if ((r & cm) && !(r & tm)) swap_rows(r, r | tm);
    }
  }

  void apply_cz(int a, int b) {
    const size_t am = static_cast<size_t>(1) << a;
    const size_t bm = static_cast<size_t>(1) << b;
    for (size_t r = 0; r < dim_; ++r)
      if ((r & am) && (r & bm)) scale_row(r, -1.0);
  }

  /// exp(-i a/2 Z_q1 Z_q2): a diagonal phase by the parity of the two bits.
  void apply_zz(int q1, int q2, double a) {
    const size_t m1 = static_cast<size_t>(1) << q1;
    const size_t m2 = static_cast<size_t>(1) << q2;
    const cplx even = std::polar(1.0, -a / 2);
    const cplx odd = std::polar(1.0, a / 2);
    for (size_t r = 0; r < dim_; ++r) scale_row(r, (!(r & m1)) == (!(r & m2)) ? even : odd);
  }

  /// exp(-i a/2 X_q1 X_q2).
  void apply_xx(int q1, int q2, double a) {
    const size_t mask = (static_cast<size_t>(1) << q1) | (static_cast<size_t>(1) << q2);
    const double c = std::cos(a / 2), s = std::sin(a / 2);
    for (size_t r = 0; r < dim_; ++r) {
      const size_t p = r ^ mask;
      if (p < r) continue;
      for (size_t col = 0; col < dim_; ++col) {
        cplx u = m_[r * dim_ + col], v = m_[p * dim_ + col];
        m_[r * dim_ + col] = c * u - cplx(0, s) * v;
        m_[p * dim_ + col] = c * v - cplx(0, s) * u;
      }
    }
  }

  /// exp(-i a/2 P) for a signed Pauli string.
  void apply_pauli_exp(const PauliString& p, double a) {
    size_t xmask = 0;
    for (int q = 0; q < p.size(); ++q)
      if (p.x_bit(q)) xmask |= static_cast<size_t>(1) << q;
    const double c = std::cos(a / 2), s = std::sin(a / 2);
    std::vector<cplx> scratch(dim_);
    for (size_t r = 0; r < dim_; ++r) {
      const size_t src = r ^ xmask;
      // P |src> = phase * |r>
      cplx phase = p.sign < 0 ? -1.0 : 1.0;
      for (int q = 0; q < p.size(); ++q) {
        const bool bit = (src >> q) & 1;
        switch (p.at(q)) {
          case Pauli::Z:
            if (bit) phase = -phase;
            break;
          case Pauli::Y:
            phase *= bit ? cplx(0, -1) : cplx(0, 1);
            break;
          default:
            break;
        }
      }
      if (src >= r) {  // visit each (r, src) pair once; handle src == r too
        for (size_t col = 0; col < dim_; ++col) {
          cplx u = m_[r * dim_ + col];
          cplx v = m_[src * dim_ + col];
          scratch[col] = c * u - cplx(0, s) * phase * v;
        }
        if (src != r) {
          // phase for the partner row: P |r> = phase' |src>
          cplx phase2 = p.sign < 0 ? -1.0 : 1.0;
          for (int q = 0; q < p.size(); ++q) {
            const bool bit = (r >> q) & 1;
            switch (p.at(q)) {
              case Pauli::Z:
                if (bit) phase2 = -phase2;
                break;
              case Pauli::Y:
                phase2 *= bit ? cplx(0, -1) : cplx(0, 1);
                break;
              default:
                break;
            }
          }
          for (size_t col = 0; col < dim_; ++col) {
            cplx u = m_[src * dim_ + col];
            cplx v = m_[r * dim_ + col];
            m_[src * dim_ + col] = c * u - cplx(0, s) * phase2 * v;
          }
        }
        for (size_t col = 0; col < dim_; ++col) m_[r * dim_ + col] = scratch[col];
      }
    }
  }

  /// Left-multiplies by one gate of the IR.
  void apply_gate(const Gate& g) {
    switch (g.kind) {
      case GateKind::H: apply_h(g.qubit()); break;
      case GateKind::S: apply_s(g.qubit()); break;
      case GateKind::Sdg: apply_sdg(g.qubit()); break;
      case GateKind::X: apply_x(g.qubit()); break;
      case GateKind::Y: apply_y(g.qubit()); break;
      case GateKind::Z: apply_z(g.qubit()); break;
      case GateKind::Rz: apply_rz(g.qubit(), g.angle.radians()); break;
      case GateKind::Cnot: apply_cnot(g.control(), g.target()); break;
      case GateKind::Cz: apply_cz(g.qubits[0], g.qubits[1]); break;
      case GateKind::Gms: {
        const auto& qs = g.qubits;
        for (size_t i = 0; i < qs.size(); ++i)
          for (size_t j = i + 1; j < qs.size(); ++j) apply_xx(qs[i], qs[j], g.angle.radians());
        break;
      }
      case GateKind::Gzz: {
        const auto& qs = g.qubits;
        for (size_t i = 0; i < qs.size(); ++i)
          for (size_t j = i + 1; j < qs.size(); ++j) apply_zz(qs[i], qs[j], g.angle.radians());
        break;
      }
      case GateKind::Gcz: {
        const auto& qs = g.qubits;
        for (size_t i = 0; i < qs.size(); ++i)
          for (size_t j = i + 1; j < qs.size(); ++j) apply_cz(qs[i], qs[j]);
        break;
      }
      case GateKind::PauliExpGate:
        apply_pauli_exp(g.pexp.string, g.pexp.angle.radians());
        break;
    }
  }

  /// Left-multiplies by a signed Pauli string.
  void apply_pauli(const PauliString& p) {
    for (int q = 0; q < p.size(); ++q) {
      switch (p.at(q)) {
        case Pauli::X: apply_x(q); break;
        case Pauli::Y: apply_y(q); break;
        case Pauli::Z: apply_z(q); break;
        default: break;
      }
    }
    if (p.sign < 0)
      for (auto& v : m_) v = -v;
  }

  /// Relabeling permutation: output wire i carries input wire perm[i].
  void apply_relabeling(const std::vector<int>& perm) {
    std::vector<cplx> next(dim_ * dim_);
    for (size_t x = 0; x < dim_; ++x) {
      size_t y = 0;
      for (size_t i = 0; i < perm.size(); ++i)
        if ((x >> perm[i]) & 1) y |= static_cast<size_t>(1) << i;
      std::copy(&m_[x * dim_], &m_[x * dim_] + dim_, &next[y * dim_]);
    }
    m_ = std::move(next);
  }

  double max_abs_diff(const DenseUnitary& other) const {
    double d = 0;
    for (size_t i = 0; i < dim_ * dim_; ++i) d = std::max(d, std::abs(m_[i] - other.m_[i]));
    return d;
  }

  /// max |U^dagger U - I|, a cheap unitarity check.
  double unitarity_defect() const {
    double d = 0;
    for (size_t i = 0; i < dim_; ++i) {
      for (size_t j = i; j < dim_; ++j) {
        cplx acc = 0;
        for (size_t k = 0; k < dim_; ++k) acc += std::conj(m_[k * dim_ + i]) * m_[k * dim_ + j];
        if (i == j) acc -= 1.0;
        d = std::max(d, std::abs(acc));
      }
    }
    return d;
  }

 private:
  void swap_rows(size_t a, size_t b) {
    for (size_t c = 0; c < dim_; ++c) std::swap(m_[a * dim_ + c], m_[b * dim_ + c]);
  }
  void scale_row(size_t r, cplx f) {
    for (size_t c = 0; c < dim_; ++c) m_[r * dim_ + c] *= f;
  }

  int n_;
  size_t dim_;
  std::vector<cplx> m_;
};

/// Dense unitary of a circuit, gates applied in list order, relabeling last.
/// A gms gate is the commuting product of two-qubit XX factors over its set;
/// gzz and gcz factor the same way over ZZ and CZ.
inline DenseUnitary unitary_of(const Circuit& c) {
  if (c.num_qubits > kMaxDenseQubits) throw Error("oracle scale exceeded (n > 12)");
  DenseUnitary u(c.num_qubits);
  for (const Gate& g : c.gates) u.apply_gate(g);
  if (c.output_relabeling) u.apply_relabeling(*c.output_relabeling);
  return u;
}

struct EquivResult {
  bool equivalent = false;
  std::complex<double> phase{1.0, 0.0};
  double max_deviation = 0.0;
};

/// Equality up to one global phase: pick the largest-magnitude entry of V,
/// take phi = U/V there, and report max |U - phi V|.
inline EquivResult equiv_up_to_phase(const DenseUnitary& u, const DenseUnitary& v, double tol) {
  if (u.dim() != v.dim()) throw Error("dimension mismatch");
  size_t br = 0, bc = 0;
  double best = -1.0;
  for (size_t r = 0; r < v.dim(); ++r) {
    for (size_t c = 0; c < v.dim(); ++c) {
      double a = std::abs(v.at(r, c));
      if (a > best) {
        best = a;
        br = r;
        bc = c;
      }
    }
  }
  if (best <= 0.0) throw Error("all-zero matrix is not unitary");
  EquivResult res;
  res.phase = u.at(br, bc) / v.at(br, bc);
  double d = 0;
  for (size_t r = 0; r < u.dim(); ++r)
    for (size_t c = 0; c < u.dim(); ++c)
      d = std::max(d, std::abs(u.at(r, c) - res.phase * v.at(r, c)));
  res.max_deviation = d;
  res.equivalent = d <= tol;
  return res;
}

inline bool circuits_equivalent(const Circuit& a, const Circuit& b, double tol = 1e-8) {
  if (a.num_qubits != b.num_qubits) return false;
  return equiv_up_to_phase(unitary_of(a), unitary_of(b), tol).equivalent;
}

/// Deterministic random Clifford+Phases circuit: `depth` Clifford gates with
/// exactly `t_count` non-Clifford rz gates spliced in at random positions.
inline Circuit random_clifford_phases_circuit(int n, int depth, int t_count,
                                              std::uint64_t seed) {
  if (n < 1) throw Error("need at least one qubit");
  std::mt19937_64 rng(seed);
  auto rint = [&rng](int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  Circuit c(n);
  for (int i = 0; i < depth; ++i) {
    int kind = (n >= 2) ? rint(0, 6) : rint(0, 4);
    switch (kind) {
      case 0: c.append(Gate::h(rint(0, n - 1))); break;
      case 1: c.append(Gate::s(rint(0, n - 1))); break;
      case 2: c.append(Gate::sdg(rint(0, n - 1))); break;
      case 3: c.append(Gate::x(rint(0, n - 1))); break;
      case 4: c.append(Gate::z(rint(0, n - 1))); break;
      case 5: {
        int a = rint(0, n - 1), b = rint(0, n - 2);
        if (b >= a) ++b;
        c.append(Gate::cnot(a, b));
        break;
      }
      case 6: {
        int a = rint(0, n - 1), b = rint(0, n - 2);
        if (b >= a) ++b;
        c.append(Gate::cz(a, b));
        break;
      }
    }
  }
  for (int t = 0; t < t_count; ++t) {
    Angle a;
    do {
      // Mix grid-adjacent angles (odd multiples of pi/4) with generic reals.
      if (rng() % 2 == 0) {
        a = Angle((2 * rint(0, 3) + 1) * (kPi / 4.0));
      } else {
        a = Angle(std::uniform_real_distribution<double>(0.0, kTwoPi)(rng));
      }
    } while (is_clifford_angle(a));
    int pos = rint(0, static_cast<int>(c.gates.size()));
    c.gates.insert(c.gates.begin() + pos, Gate::rz(rint(0, n - 1), a));
  }
  return c;
}

}  // namespace gmsc
