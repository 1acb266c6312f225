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
#include <cstdint>
#include <numbers>

#include "gmsc/error.hpp"

namespace gmsc {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Tolerance used to decide whether an angle lies on the pi/2 grid.
inline constexpr double kCliffordAngleTol = 1e-12;

/// A rotation angle in radians, stored canonically reduced to [0, 2*pi).
///
/// Reduction is idempotent. Halving is exact in binary floating point
/// (the exponent decrements, the mantissa is untouched), which the
/// untargeted scheduler relies on when it divides a base angle by 2^m.
class Angle {
 public:
  constexpr Angle() = default;
  Angle(double radians) : value_(reduce(radians)) {}  // NOLINT: implicit by design

  double radians() const { return value_; }

  Angle negated() const { return Angle(-value_); }
  Angle half() const {
    Angle a;
    a.value_ = value_ * 0.5;  // exact; stays inside [0, pi)
    return a;
  }
  Angle doubled() const { return Angle(value_ * 2.0); }

  bool is_zero() const { return value_ == 0.0; }

  friend bool operator==(const Angle& a, const Angle& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Angle& a, const Angle& b) { return !(a == b); }
  friend Angle operator+(const Angle& a, const Angle& b) { return Angle(a.value_ + b.value_); }

  static double reduce(double radians) {
    if (!std::isfinite(radians)) throw Error("angle must be finite");
    double r = std::fmod(radians, kTwoPi);
    if (r < 0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;  // fmod/rounding edge
    return r;
  }

 private:
  double value_ = 0.0;
};

/// True iff `a` is within kCliffordAngleTol of a multiple of pi/2.
inline bool is_clifford_angle(const Angle& a) {
  double k = std::round(a.radians() / (kPi / 2.0));
  return std::abs(a.radians() - k * (kPi / 2.0)) <= kCliffordAngleTol;
}

/// Number of quarter turns (mod 4) for a Clifford angle.
inline int clifford_quarter_turns(const Angle& a) {
  if (!is_clifford_angle(a)) throw Error("angle is not a multiple of pi/2");
  auto k = static_cast<long long>(std::llround(a.radians() / (kPi / 2.0)));
  return static_cast<int>(((k % 4) + 4) % 4);
}

}  // namespace gmsc
