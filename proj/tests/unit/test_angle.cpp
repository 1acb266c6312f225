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

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "gmsc/angle.hpp"

using namespace gmsc;

TEST_CASE("angle reduction is idempotent and lands in [0, 2pi)") {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> dist(-50.0, 50.0);
  for (int i = 0; i < 2000; ++i) {
    Angle a(dist(rng));
    REQUIRE(a.radians() >= 0.0);
    REQUIRE(a.radians() < kTwoPi);
    REQUIRE(Angle(a.radians()) == a);
  }
  REQUIRE(Angle(-kPi).radians() == Catch::Approx(kPi));
  REQUIRE(Angle(kTwoPi).radians() == 0.0);
}

TEST_CASE("halving then doubling is exact bit for bit") {
  std::mt19937_64 rng(999);
  std::uniform_real_distribution<double> dist(0.0, kTwoPi);
  for (int i = 0; i < 2000; ++i) {
    Angle a(dist(rng));
    Angle h = a.half();
    REQUIRE(h.doubled() == a);
    // repeated halving stays exact too
    Angle h4 = a.half().half().half().half();
    REQUIRE(h4.radians() * 16.0 == a.radians());
  }
}

TEST_CASE("clifford angle detection") {
  REQUIRE(is_clifford_angle(Angle(kPi / 2)));   // S
  REQUIRE(is_clifford_angle(Angle(0.0)));
  REQUIRE(is_clifford_angle(Angle(kPi)));       // Z
  REQUIRE(is_clifford_angle(Angle(3 * kPi / 2)));
  REQUIRE_FALSE(is_clifford_angle(Angle(kPi / 4)));  // T

  // pi/4 as the binary double 0.7853981633974483: nearest grid point is
  // k = round(a / (pi/2)) * pi/2; the distance is far above tolerance.
  double t = 0.7853981633974483;
  double k = std::round(t / (kPi / 2.0));
  REQUIRE(std::abs(t - k * (kPi / 2.0)) > kCliffordAngleTol);
  REQUIRE_FALSE(is_clifford_angle(Angle(t)));

  // within-tolerance perturbations still count as Clifford
  REQUIRE(is_clifford_angle(Angle(kPi / 2 + 1e-13)));
  REQUIRE_FALSE(is_clifford_angle(Angle(kPi / 2 + 1e-9)));
}

TEST_CASE("quarter turn classification") {
  REQUIRE(clifford_quarter_turns(Angle(0.0)) == 0);
  REQUIRE(clifford_quarter_turns(Angle(kPi / 2)) == 1);
  REQUIRE(clifford_quarter_turns(Angle(kPi)) == 2);
  REQUIRE(clifford_quarter_turns(Angle(3 * kPi / 2)) == 3);
  REQUIRE(clifford_quarter_turns(Angle(-kPi / 2)) == 3);
  REQUIRE_THROWS_AS(clifford_quarter_turns(Angle(0.3)), Error);
}
