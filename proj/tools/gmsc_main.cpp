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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gmsc/gmsc.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitNotEquivalent = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gmsc::Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw gmsc::Error("cannot write '" + path + "'");
  out << content;
}

// Circuits arrive as either the QASM subset or the compiled JSON form;
// JSON starts with '{'.
gmsc::Circuit load_circuit(const std::string& path) {
  std::string text = read_file(path);
  size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && text[i] == '{') return gmsc::parse_json(text);
  return gmsc::parse_qasm(text);
}

// Equivalence with the cheapest adequate oracle: tableaux when both sides
// are Clifford, dense matrices otherwise.
bool check_equivalence(const gmsc::Circuit& a, const gmsc::Circuit& b, double tol) {
  if (a.num_qubits != b.num_qubits) throw gmsc::Error("qubit counts differ");
  if (gmsc::is_clifford_circuit(a) && gmsc::is_clifford_circuit(b))
    return gmsc::tableau_equiv(a, b);
  if (a.num_qubits > gmsc::kMaxDenseQubits)
    throw gmsc::Error("circuit too large for dense verification (n > 12)");
  return gmsc::circuits_equivalent(a, b, tol);
}

int cmd_compile(const std::string& in_path, const std::string& out_path,
                const std::string& mode, bool verify, int max_verify_qubits,
                const std::string& report_path) {
  gmsc::Circuit input = load_circuit(in_path);
  auto [compiled, report] = mode == "untargeted" ? gmsc::compile_untargeted(input)
                                                 : gmsc::compile_targeted(input);

  int exit_code = kExitOk;
  if (verify) {
    if (input.num_qubits > max_verify_qubits) {
      report.verified = gmsc::VerifyStatus::Skipped;
    } else {
      bool ok = false;
      try {
        ok = check_equivalence(input, compiled, 1e-8);
        report.verified = ok ? gmsc::VerifyStatus::Yes : gmsc::VerifyStatus::No;
      } catch (const gmsc::Error&) {
        report.verified = gmsc::VerifyStatus::Skipped;  // oracle cap
      }
      if (report.verified == gmsc::VerifyStatus::No) exit_code = kExitNotEquivalent;
    }
  }

  write_file(out_path, gmsc::emit_json(compiled) + "\n");
  if (!report_path.empty()) write_file(report_path, gmsc::report_to_json(report));
  std::cout << "n=" << report.n << " N=" << report.non_clifford_count
            << " global_gates=" << report.global_gate_count << " bound=" << report.bound
            << " bound_met=" << (report.bound_met ? "true" : "false")
            << " verified=" << gmsc::verify_status_name(report.verified) << "\n";
  if (report.verified == gmsc::VerifyStatus::No)
    std::cerr << "verification failed: output is not equivalent to the input\n";
  return exit_code;
}

int cmd_stats(const std::string& in_path) {
  gmsc::Circuit c = load_circuit(in_path);
  std::cout << "n: " << c.num_qubits << "\n";
  // N is defined for circuits over Clifford gates plus rz only.
  try {
    std::cout << "N: " << gmsc::count_non_clifford(c) << "\n";
  } catch (const gmsc::Error&) {
    std::cout << "N: n/a\n";
  }
  std::cout << "depth: " << gmsc::circuit_depth(c) << "\n";
  std::cout << "global_gates: " << gmsc::gms_count(c) << "\n";
  std::cout << "gates:\n";
  for (const auto& [kind, count] : gmsc::gate_histogram(c))
    std::cout << "  " << kind << ": " << count << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& a_path, const std::string& b_path, double tol) {
  gmsc::Circuit a = load_circuit(a_path);
  gmsc::Circuit b = load_circuit(b_path);
  bool ok = check_equivalence(a, b, tol);
  std::cout << (ok ? "equivalent" : "not equivalent") << "\n";
  return ok ? kExitOk : kExitNotEquivalent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gmsc: compiles Clifford+Phases circuits to global-gate circuits"};
  app.require_subcommand(1);

  auto* compile = app.add_subcommand("compile", "compile a circuit to global gates");
  std::string in_path, out_path, report_path;
  std::string mode = "targeted";
  bool verify = true;  // default-on; skipped with a marker above the size cap
  int max_verify_qubits = 10;
  compile->add_option("--in", in_path, "input circuit (QASM subset or JSON)")->required();
  compile->add_option("--out", out_path, "output JSON path")->required();
  compile->add_option("--mode", mode, "targeted|untargeted")
      ->check(CLI::IsMember({"targeted", "untargeted"}));
  compile->add_flag("--verify,!--no-verify", verify,
                    "check output equivalence against the input (default on)");
  compile->add_option("--max-verify-qubits", max_verify_qubits,
                      "skip verification above this size");
  compile->add_option("--report", report_path, "write a JSON gate-count report");

  auto* stats = app.add_subcommand("stats", "print circuit statistics");
  std::string stats_in;
  stats->add_option("--in", stats_in, "input circuit")->required();

  auto* verify_cmd = app.add_subcommand("verify", "check two circuits for equivalence");
  std::string a_path, b_path;
  double tol = 1e-8;
  verify_cmd->add_option("--a", a_path, "first circuit")->required();
  verify_cmd->add_option("--b", b_path, "second circuit")->required();
  verify_cmd->add_option("--tol", tol, "tolerance for the dense check");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compile)
      return cmd_compile(in_path, out_path, mode, verify, max_verify_qubits, report_path);
    if (*stats) return cmd_stats(stats_in);
    if (*verify_cmd) return cmd_verify(a_path, b_path, tol);
  } catch (const gmsc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const gmsc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
