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

#include "gmsc/normal_form.hpp"
#include "gmsc/tableau.hpp"

namespace gmsc {

/// A circuit rewritten as exponentiated Paulis followed by one residual
/// Clifford: U = residual . P_N(a_N) ... P_1(a_1), rotations in program
/// order of the phases they came from.
struct ExtractedForm {
  std::vector<PauliExp> rotations;
  CliffordTableau residual;

  explicit ExtractedForm(int n) : residual(CliffordTableau::identity(n)) {}
};

/// Commutes every non-Clifford phase to the front. A running tableau holds
/// the Cliffords seen so far; each non-Clifford rz on qubit q becomes the
/// rotation conjugate_back(T, Z_q) with the rz angle (sign folded into the
/// angle). Clifford-angle rz gates fold into the tableau as S powers.
inline ExtractedForm extract(const Circuit& c) {
  const int n = c.num_qubits;
  ExtractedForm form(n);
  CliffordTableau t = CliffordTableau::identity(n);
  for (const Gate& g : c.gates) {
    if (is_clifford_gate(g)) {
      t.apply_gate(g);
      continue;
    }
    PauliString base = PauliString::identity(n);
    Angle angle;
    if (g.kind == GateKind::Rz) {
      base = PauliString::single(n, g.qubit(), Pauli::Z);
      angle = g.angle;
    } else if (g.kind == GateKind::PauliExpGate) {
      base = g.pexp.string;
      angle = g.pexp.angle;
    } else {
      throw Error(std::string("unsupported non-Clifford gate: ") + gate_kind_name(g.kind));
    }
    PauliString p = conjugate_back(t, base);
    if (p.weight() == 0) continue;  // a global phase; cannot arise from Z_q
    form.rotations.emplace_back(std::move(p), angle);
  }
  if (c.output_relabeling) t.apply_relabeling(*c.output_relabeling);
  form.residual = std::move(t);
  return form;
}

/// Inverse of extract for verification: the rotations as gates, then a
/// plain-gate realization of the residual via its normal form.
inline Circuit recompose(const ExtractedForm& form) {
  const int n = form.residual.num_qubits();
  Circuit c(n);
  for (const PauliExp& r : form.rotations) c.append(Gate::pauli_exp(r));
  c.append(extract_normal_form(form.residual).to_circuit().gates);
  return c;
}

}  // namespace gmsc
