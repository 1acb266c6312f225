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

#include <array>
#include <map>
#include <vector>

#include "gmsc/gate.hpp"

namespace gmsc {

/// A single-qubit Clifford, identified (up to global phase) by its
/// conjugation action on X and Z. There are 24 of them.
struct LocalClifford {
  Pauli x_img = Pauli::X;
  int x_sign = +1;
  Pauli z_img = Pauli::Z;
  int z_sign = +1;

  static LocalClifford identity() { return {}; }

  bool is_identity() const {
    return x_img == Pauli::X && x_sign == +1 && z_img == Pauli::Z && z_sign == +1;
  }

  /// Conjugation action on a signed single-qubit Pauli: U p U^dagger.
  std::pair<Pauli, int> apply(Pauli p, int sign) const {
    switch (p) {
      case Pauli::I: return {Pauli::I, sign};
      case Pauli::X: return {x_img, sign * x_sign};
      case Pauli::Z: return {z_img, sign * z_sign};
      case Pauli::Y: {
        // Y = iXZ, so U Y U^dagger = i (UXU^dagger)(UZU^dagger).
        int ipow = 1;
        Pauli r = pauli_mul(x_img, z_img, ipow);
        int s = sign * x_sign * z_sign;
        if (ipow == 2) s = -s;
        if (ipow % 2 != 0) throw Error("broken local Clifford");
        return {r, s};
      }
    }
    return {Pauli::I, sign};
  }

  friend bool operator==(const LocalClifford& a, const LocalClifford& b) {
    return a.x_img == b.x_img && a.x_sign == b.x_sign && a.z_img == b.z_img &&
           a.z_sign == b.z_sign;
  }
  friend bool operator<(const LocalClifford& a, const LocalClifford& b) {
    auto key = [](const LocalClifford& c) {
      return std::array<int, 4>{static_cast<int>(c.x_img), c.x_sign, static_cast<int>(c.z_img),
                                c.z_sign};
    };
    return key(a) < key(b);
  }
};

/// a after b: the element of (a . b), b applied first.
inline LocalClifford compose(const LocalClifford& a, const LocalClifford& b) {
  LocalClifford r;
  auto x = b.apply(Pauli::X, +1);
  auto xx = a.apply(x.first, x.second);
  r.x_img = xx.first;
  r.x_sign = xx.second;
  auto z = b.apply(Pauli::Z, +1);
  auto zz = a.apply(z.first, z.second);
  r.z_img = zz.first;
  r.z_sign = zz.second;
  return r;
}

inline LocalClifford local_clifford_dagger(const LocalClifford& c) {
  // The group has 24 elements; scan candidates for the two-sided inverse.
  for (Pauli xi : {Pauli::X, Pauli::Y, Pauli::Z}) {
    for (Pauli zi : {Pauli::X, Pauli::Y, Pauli::Z}) {
      if (xi == zi) continue;
      for (int xs : {+1, -1}) {
        for (int zs : {+1, -1}) {
          LocalClifford cand{xi, xs, zi, zs};
          if (compose(cand, c).is_identity() && compose(c, cand).is_identity()) return cand;
        }
      }
    }
  }
  throw Error("no inverse found for local Clifford");
}

inline LocalClifford local_clifford_of_kind(GateKind k) {
  LocalClifford c;
  switch (k) {
    case GateKind::H:
      c.x_img = Pauli::Z;
      c.z_img = Pauli::X;
      break;
    case GateKind::S:
      c.x_img = Pauli::Y;
      break;
    case GateKind::Sdg:
      c.x_img = Pauli::Y;
      c.x_sign = -1;
      break;
    case GateKind::X:
      c.z_sign = -1;
      break;
    case GateKind::Y:
      c.x_sign = -1;
      c.z_sign = -1;
      break;
    case GateKind::Z:
      c.x_sign = -1;
      break;
    default:
      throw Error("not a single-qubit Clifford gate kind");
  }
  return c;
}

/// Shortest {H, S} word for each of the 24 elements, found once by BFS.
inline const std::vector<GateKind>& local_clifford_gates(const LocalClifford& c) {
  static const std::map<LocalClifford, std::vector<GateKind>> table = [] {
    std::map<LocalClifford, std::vector<GateKind>> t;
    std::vector<LocalClifford> frontier{LocalClifford::identity()};
    t[LocalClifford::identity()] = {};
    while (!frontier.empty()) {
      std::vector<LocalClifford> next;
      for (const LocalClifford& e : frontier) {
        for (GateKind k : {GateKind::H, GateKind::S}) {
          // Append k in time order: the new element is k . e.
          LocalClifford f = compose(local_clifford_of_kind(k), e);
          if (t.count(f)) continue;
          auto word = t[e];
          word.push_back(k);
          t[f] = std::move(word);
          next.push_back(f);
        }
      }
      frontier = std::move(next);
    }
    if (t.size() != 24) throw Error("local Clifford enumeration failed");
    return t;
  }();
  auto it = table.find(c);
  if (it == table.end()) throw Error("invalid local Clifford element");
  return it->second;
}

/// Gate sequence (time order) realizing the element on qubit q.
inline std::vector<Gate> local_clifford_to_gates(const LocalClifford& c, int q) {
  std::vector<Gate> out;
  for (GateKind k : local_clifford_gates(c)) {
    out.push_back(k == GateKind::H ? Gate::h(q) : Gate::s(q));
  }
  return out;
}

/// One single-qubit Clifford per wire.
using LocalCliffordLayer = std::vector<LocalClifford>;

inline bool layer_is_identity(const LocalCliffordLayer& layer) {
  for (const auto& c : layer)
    if (!c.is_identity()) return false;
  return true;
}

inline std::vector<Gate> layer_to_gates(const LocalCliffordLayer& layer) {
  std::vector<Gate> out;
  for (int q = 0; q < static_cast<int>(layer.size()); ++q) {
    auto gs = local_clifford_to_gates(layer[q], q);
    out.insert(out.end(), gs.begin(), gs.end());
  }
  return out;
}

}  // namespace gmsc
