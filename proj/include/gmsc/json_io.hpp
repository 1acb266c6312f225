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

#include <json.hpp>

#include "gmsc/circuit.hpp"
#include "gmsc/qasm.hpp"
#include "gmsc/report.hpp"

namespace gmsc {

/// Serializes a circuit as JSON:
///   {"num_qubits": n, "output_relabeling": [...]|null,
///    "gates": [{"kind": "...", "qubits": [...], "angle": <radians>}]}
/// Set-like gates (gms/gzz/gcz) and cz carry ascending qubit lists; cx keeps
/// [control, target]. The angle key is present only where it means
/// something. Output is deterministic: identical circuits print
/// byte-identically.
inline std::string emit_json(const Circuit& c) {
  nlohmann::ordered_json j;
  j["num_qubits"] = c.num_qubits;
  if (c.output_relabeling)
    j["output_relabeling"] = *c.output_relabeling;
  else
    j["output_relabeling"] = nullptr;
  j["gates"] = nlohmann::ordered_json::array();
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::PauliExpGate)
      throw Error("exponentiated Pauli gates have no JSON schema; lower them first");
    nlohmann::ordered_json jg;
    jg["kind"] = gate_kind_name(g.kind);
    jg["qubits"] = g.qubits;
    if (g.has_angle()) jg["angle"] = g.angle.radians();
    j["gates"].push_back(std::move(jg));
  }
  return j.dump();
}

/// Inverse of emit_json. Schema violations raise ParseError.
inline Circuit parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError({1, 1}, ParseErrorKind::Syntax, std::string("bad JSON: ") + e.what());
  }
  auto fail = [](ParseErrorKind kind, const std::string& msg) -> void {
    throw ParseError({1, 1}, kind, msg);
  };
  if (!j.is_object() || !j.contains("num_qubits") || !j["num_qubits"].is_number_integer())
    fail(ParseErrorKind::Syntax, "missing or bad num_qubits");
  int n = j["num_qubits"].get<int>();
  if (n < 1) fail(ParseErrorKind::Syntax, "num_qubits must be positive");
  Circuit c(n);
  if (!j.contains("gates") || !j["gates"].is_array()) fail(ParseErrorKind::Syntax, "missing gates");
  for (const auto& jg : j["gates"]) {
    if (!jg.is_object() || !jg.contains("kind") || !jg["kind"].is_string() ||
        !jg.contains("qubits") || !jg["qubits"].is_array())
      fail(ParseErrorKind::Syntax, "bad gate entry");
    std::string kind = jg["kind"].get<std::string>();
    std::vector<int> qs;
    for (const auto& q : jg["qubits"]) {
      if (!q.is_number_integer()) fail(ParseErrorKind::Syntax, "bad qubit index");
      qs.push_back(q.get<int>());
      if (qs.back() < 0 || qs.back() >= n)
        fail(ParseErrorKind::BadQubitIndex, "qubit index out of range");
    }
    double angle = 0.0;
    bool has_angle = jg.contains("angle");
    if (has_angle && !jg["angle"].is_number()) fail(ParseErrorKind::Syntax, "bad angle");
    if (has_angle) angle = jg["angle"].get<double>();

    auto need = [&](size_t k, bool wants_angle) {
      if (qs.size() != k) fail(ParseErrorKind::Syntax, "wrong qubit count for '" + kind + "'");
      if (wants_angle != has_angle)
        fail(ParseErrorKind::Syntax, "angle mismatch for '" + kind + "'");
    };
    try {
      if (kind == "h") { need(1, false); c.append(Gate::h(qs[0])); }
      else if (kind == "s") { need(1, false); c.append(Gate::s(qs[0])); }
      else if (kind == "sdg") { need(1, false); c.append(Gate::sdg(qs[0])); }
      else if (kind == "x") { need(1, false); c.append(Gate::x(qs[0])); }
      else if (kind == "y") { need(1, false); c.append(Gate::y(qs[0])); }
      else if (kind == "z") { need(1, false); c.append(Gate::z(qs[0])); }
      else if (kind == "rz") { need(1, true); c.append(Gate::rz(qs[0], Angle(angle))); }
      else if (kind == "cx") { need(2, false); c.append(Gate::cnot(qs[0], qs[1])); }
      else if (kind == "cz") { need(2, false); c.append(Gate::cz(qs[0], qs[1])); }
      else if (kind == "gms") {
        if (!has_angle) fail(ParseErrorKind::Syntax, "gms needs an angle");
        c.append(Gate::gms(QubitSet(qs), Angle(angle)));
      } else if (kind == "gzz") {
        if (!has_angle) fail(ParseErrorKind::Syntax, "gzz needs an angle");
        c.append(Gate::gzz(QubitSet(qs), Angle(angle)));
      } else if (kind == "gcz") {
        if (has_angle) fail(ParseErrorKind::Syntax, "gcz takes no angle");
        c.append(Gate::gcz(QubitSet(qs)));
      } else {
        fail(ParseErrorKind::UnsupportedGate, "unsupported gate kind '" + kind + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(ParseErrorKind::BadQubitIndex, e.what());
    }
  }
  if (j.contains("output_relabeling") && !j["output_relabeling"].is_null()) {
    if (!j["output_relabeling"].is_array())
      fail(ParseErrorKind::Syntax, "bad output_relabeling");
    std::vector<int> perm;
    for (const auto& p : j["output_relabeling"]) {
      if (!p.is_number_integer()) fail(ParseErrorKind::Syntax, "bad output_relabeling entry");
      perm.push_back(p.get<int>());
    }
    try {
      c.set_output_relabeling(perm);
    } catch (const Error& e) {
      fail(ParseErrorKind::Syntax, e.what());
    }
  }
  return c;
}

/// Compilation report with a stable key order, for CI consumption.
inline std::string report_to_json(const SynthReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["N"] = r.non_clifford_count;
  j["global_gate_count"] = r.global_gate_count;
  j["mode"] = compile_mode_name(r.mode);
  j["bound"] = r.bound;
  j["bound_met"] = r.bound_met;
  j["verified"] = verify_status_name(r.verified);
  j["relabeling_used"] = r.relabeling_used;
  j["rotation_gate_count"] = r.rotation_gate_count;
  j["clifford_gate_count"] = r.clifford_gate_count;
  j["weight1_rotations"] = r.weight1_rotations;
  return j.dump(2) + "\n";
}

}  // namespace gmsc
