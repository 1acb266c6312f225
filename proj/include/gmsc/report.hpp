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

#include <string>

namespace gmsc {

enum class CompileMode { Targeted, Untargeted };

enum class VerifyStatus { Yes, No, Skipped };

inline const char* compile_mode_name(CompileMode m) {
  return m == CompileMode::Targeted ? "targeted" : "untargeted";
}
inline const char* verify_status_name(VerifyStatus v) {
  switch (v) {
    case VerifyStatus::Yes: return "yes";
    case VerifyStatus::No: return "no";
    case VerifyStatus::Skipped: return "skipped";
  }
  return "?";
}

/// Gate-count audit of one compilation. `bound` is N + 6n - 8 in targeted
/// mode; in untargeted mode it is 2N plus the measured Clifford tail f(n).
/// rotation_gate_count and clifford_gate_count split the total between the
/// per-rotation synthesis and the residual Clifford synthesis.
struct SynthReport {
  int n = 0;
  int non_clifford_count = 0;  // N
  int global_gate_count = 0;
  CompileMode mode = CompileMode::Targeted;
  long long bound = 0;
  bool bound_met = false;
  VerifyStatus verified = VerifyStatus::Skipped;
  bool relabeling_used = false;
  int rotation_gate_count = 0;
  int clifford_gate_count = 0;
  // Rotations whose support degenerated to a single qubit; they compile to a
  // bare rz and consume no global gate.
  int weight1_rotations = 0;
};

}  // namespace gmsc
