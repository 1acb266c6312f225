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
#include <string>
#include <vector>

#include "gmsc/angle.hpp"
#include "gmsc/error.hpp"

namespace gmsc {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline bool pauli_x_bit(Pauli p) { return p == Pauli::X || p == Pauli::Y; }
inline bool pauli_z_bit(Pauli p) { return p == Pauli::Z || p == Pauli::Y; }

inline Pauli pauli_from_bits(bool x, bool z) {
  if (x && z) return Pauli::Y;
  if (x) return Pauli::X;
  if (z) return Pauli::Z;
  return Pauli::I;
}

inline char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

/// Single-qubit Pauli product a*b = i^t * r. Returns r and accumulates t
/// (a power of i, mod 4) into `i_power`.
inline Pauli pauli_mul(Pauli a, Pauli b, int& i_power) {
  if (a == Pauli::I) return b;
  if (b == Pauli::I) return a;
  if (a == b) return Pauli::I;
  // The cyclic order X->Y->Z->X gains a +i; going backwards gains -i.
  static constexpr int kPhase[4][4] = {
      // I  X  Y  Z
      {0, 0, 0, 0},  // I
      {0, 0, 1, 3},  // X: XY=iZ, XZ=-iY
      {0, 3, 0, 1},  // Y: YX=-iZ, YZ=iX
      {0, 1, 3, 0},  // Z: ZX=iY, ZY=-iX
  };
  i_power = (i_power + kPhase[static_cast<int>(a)][static_cast<int>(b)]) % 4;
  // Result is the third Pauli.
  int s = 6 - static_cast<int>(a) - static_cast<int>(b);  // X+Y+Z indices sum to 6
  return static_cast<Pauli>(s);
}

/// A signed string of Paulis over n qubits.
struct PauliString {
  std::vector<Pauli> paulis;
  int sign = +1;  // +1 or -1

  PauliString() = default;
  explicit PauliString(std::vector<Pauli> ps, int s = +1) : paulis(std::move(ps)), sign(s) {
    if (sign != 1 && sign != -1) throw Error("PauliString sign must be +1 or -1");
  }

  static PauliString identity(int n) { return PauliString(std::vector<Pauli>(n, Pauli::I)); }
  static PauliString single(int n, int q, Pauli p, int s = +1) {
    PauliString r = identity(n);
    r.paulis.at(q) = p;
    r.sign = s;
    return r;
  }

  int size() const { return static_cast<int>(paulis.size()); }
  Pauli at(int q) const { return paulis.at(q); }
  bool x_bit(int q) const { return pauli_x_bit(paulis[q]); }
  bool z_bit(int q) const { return pauli_z_bit(paulis[q]); }

  int weight() const {
    int w = 0;
    for (Pauli p : paulis) w += (p != Pauli::I);
    return w;
  }

  /// Indices of the non-identity positions, ascending.
  std::vector<int> support() const {
    std::vector<int> s;
    for (int q = 0; q < size(); ++q)
      if (paulis[q] != Pauli::I) s.push_back(q);
    return s;
  }

  int y_count() const {
    int c = 0;
    for (Pauli p : paulis) c += (p == Pauli::Y);
    return c;
  }

  bool commutes_with(const PauliString& other) const {
    if (size() != other.size()) throw Error("Pauli string length mismatch");
    int anti = 0;
    for (int q = 0; q < size(); ++q) {
      anti ^= (x_bit(q) && other.z_bit(q)) ^ (z_bit(q) && other.x_bit(q));
    }
    return anti == 0;
  }

  std::string str() const {
    std::string s = sign < 0 ? "-" : "+";
    for (Pauli p : paulis) s += pauli_char(p);
    return s;
  }

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.sign == b.sign && a.paulis == b.paulis;
  }

  /// True iff the unsigned parts are equal.
  bool same_paulis(const PauliString& other) const { return paulis == other.paulis; }
};

/// Product a*b with the power of i accumulated into `i_power`. Signs multiply
/// into the result's sign; the caller decides what to do with the i phase.
inline PauliString pauli_string_mul(const PauliString& a, const PauliString& b, int& i_power) {
  if (a.size() != b.size()) throw Error("Pauli string length mismatch");
  PauliString r = PauliString::identity(a.size());
  r.sign = a.sign * b.sign;
  for (int q = 0; q < a.size(); ++q) {
    r.paulis[q] = pauli_mul(a.paulis[q], b.paulis[q], i_power);
  }
  return r;
}

/// Product of two Pauli strings whose product is Hermitian (even i power).
inline PauliString pauli_string_mul(const PauliString& a, const PauliString& b) {
  int i_power = 0;
  PauliString r = pauli_string_mul(a, b, i_power);
  if (i_power % 2 != 0) throw Error("Pauli product is not Hermitian");
  if (i_power == 2) r.sign = -r.sign;
  return r;
}

/// An exponentiated Pauli exp(-i*angle/2 * P). The sign of the string is
/// canonicalized into the angle, so `string.sign` is always +1.
struct PauliExp {
  PauliString string;
  Angle angle;

  PauliExp() = default;
  PauliExp(PauliString s, Angle a) : string(std::move(s)), angle(a) {
    if (string.sign < 0) {
      string.sign = +1;
      angle = angle.negated();
    }
  }

  friend bool operator==(const PauliExp& a, const PauliExp& b) {
    return a.string == b.string && a.angle == b.angle;
  }
};

}  // namespace gmsc
