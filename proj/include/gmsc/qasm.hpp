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

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gmsc/circuit.hpp"

namespace gmsc {

struct SourceSpan {
  int line = 1;
  int column = 1;
};

enum class ParseErrorKind { Syntax, UnsupportedGate, BadQubitIndex };

class ParseError : public Error {
 public:
  ParseError(SourceSpan span, ParseErrorKind kind, const std::string& msg)
      : Error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + msg),
        span_(span),
        kind_(kind) {}

  SourceSpan span() const { return span_; }
  ParseErrorKind kind() const { return kind_; }

 private:
  SourceSpan span_;
  ParseErrorKind kind_;
};

namespace qasm_detail {

struct Token {
  enum Type { Ident, Number, Punct, String, End } type = End;
  std::string text;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_ws_and_comments();
    Token t;
    t.span = {line_, col_};
    if (pos_ >= src_.size()) return t;
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.type = Token::Ident;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' ||
              src_[pos_] == '.'))
        t.text += take();
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      t.type = Token::Number;
      bool seen_e = false;
      while (pos_ < src_.size()) {
        char d = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(d)) || d == '.') {
          t.text += take();
        } else if ((d == 'e' || d == 'E') && !seen_e) {
          seen_e = true;
          t.text += take();
          if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) t.text += take();
        } else {
          break;
        }
      }
      return t;
    }
    if (c == '"') {
      t.type = Token::String;
      take();
      while (pos_ < src_.size() && src_[pos_] != '"') t.text += take();
      if (pos_ >= src_.size()) throw ParseError(t.span, ParseErrorKind::Syntax,
                                                "unterminated string literal");
      take();
      return t;
    }
    t.type = Token::Punct;
    t.text = std::string(1, take());
    return t;
  }

 private:
  char take() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip_ws_and_comments() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        take();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') take();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) { advance(); }

  Circuit parse_program() {
    Circuit circuit;
    bool have_qreg = false;
    while (cur_.type != Token::End) {
      if (cur_.type != Token::Ident)
        throw ParseError(cur_.span, ParseErrorKind::Syntax,
                         "expected a statement, got '" + cur_.text + "'");
      if (cur_.text == "OPENQASM") {
        advance();
        expect_number("version");
        expect_punct(";");
        continue;
      }
      if (cur_.text == "include") {
        SourceSpan sp = cur_.span;
        advance();
        if (cur_.type != Token::String || cur_.text != "qelib1.inc")
          throw ParseError(sp, ParseErrorKind::Syntax, "include files are not supported");
        advance();
        expect_punct(";");
        continue;
      }
      if (cur_.text == "qreg") {
        if (have_qreg)
          throw ParseError(cur_.span, ParseErrorKind::Syntax, "only one qreg is supported");
        advance();
        reg_name_ = expect_ident("register name");
        expect_punct("[");
        int n = expect_int("register size");
        expect_punct("]");
        expect_punct(";");
        if (n < 1) throw ParseError(cur_.span, ParseErrorKind::Syntax, "empty register");
        circuit = Circuit(n);
        have_qreg = true;
        continue;
      }
      // gate application
      if (!have_qreg)
        throw ParseError(cur_.span, ParseErrorKind::Syntax, "gate before qreg declaration");
      parse_gate(circuit);
    }
    if (!have_qreg) throw ParseError(cur_.span, ParseErrorKind::Syntax, "missing qreg");
    return circuit;
  }

 private:
  void parse_gate(Circuit& circuit) {
    Token name = cur_;
    advance();
    double angle = 0.0;
    bool has_angle = false;
    if (cur_.type == Token::Punct && cur_.text == "(") {
      advance();
      angle = parse_expr();
      expect_punct(")");
      has_angle = true;
    }
    std::vector<int> args;
    while (true) {
      args.push_back(parse_arg(circuit.num_qubits, name.span));
      if (cur_.type == Token::Punct && cur_.text == ",") {
        advance();
        continue;
      }
      break;
    }
    expect_punct(";");

    auto need = [&](size_t k, bool wants_angle) {
      if (args.size() != k)
        throw ParseError(name.span, ParseErrorKind::Syntax,
                         "'" + name.text + "' expects " + std::to_string(k) + " qubit(s)");
      if (wants_angle != has_angle)
        throw ParseError(name.span, ParseErrorKind::Syntax,
                         wants_angle ? "'" + name.text + "' needs an angle parameter"
                                     : "'" + name.text + "' takes no parameter");
    };
    try {
      if (name.text == "h") { need(1, false); circuit.append(Gate::h(args[0])); }
      else if (name.text == "s") { need(1, false); circuit.append(Gate::s(args[0])); }
      else if (name.text == "sdg") { need(1, false); circuit.append(Gate::sdg(args[0])); }
      else if (name.text == "x") { need(1, false); circuit.append(Gate::x(args[0])); }
      else if (name.text == "y") { need(1, false); circuit.append(Gate::y(args[0])); }
      else if (name.text == "z") { need(1, false); circuit.append(Gate::z(args[0])); }
      else if (name.text == "rz") { need(1, true); circuit.append(Gate::rz(args[0], Angle(angle))); }
      else if (name.text == "cx") { need(2, false); circuit.append(Gate::cnot(args[0], args[1])); }
      else if (name.text == "cz") { need(2, false); circuit.append(Gate::cz(args[0], args[1])); }
      else {
        throw ParseError(name.span, ParseErrorKind::UnsupportedGate,
                         "unsupported gate '" + name.text + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(name.span, ParseErrorKind::BadQubitIndex, e.what());
    }
  }

  int parse_arg(int n, SourceSpan where) {
    std::string reg = expect_ident("qubit argument");
    if (reg != reg_name_)
      throw ParseError(where, ParseErrorKind::Syntax, "unknown register '" + reg + "'");
    expect_punct("[");
    Token idx_tok = cur_;
    int idx = expect_int("qubit index");
    expect_punct("]");
    if (idx < 0 || idx >= n)
      throw ParseError(idx_tok.span, ParseErrorKind::BadQubitIndex,
                       "qubit index " + std::to_string(idx) + " out of range");
    return idx;
  }

  // expr := ['-'] term (('*'|'/') term)* ; term := number | 'pi' | '(' expr ')'
  double parse_expr() {
    bool neg = false;
    while (cur_.type == Token::Punct && cur_.text == "-") {
      neg = !neg;
      advance();
    }
    double v = parse_term();
    while (cur_.type == Token::Punct && (cur_.text == "*" || cur_.text == "/")) {
      bool mul = cur_.text == "*";
      advance();
      bool tneg = false;
      while (cur_.type == Token::Punct && cur_.text == "-") {
        tneg = !tneg;
        advance();
      }
      double rhs = parse_term();
      if (tneg) rhs = -rhs;
      if (mul) {
        v *= rhs;
      } else {
        if (rhs == 0.0) throw ParseError(cur_.span, ParseErrorKind::Syntax, "division by zero");
        v /= rhs;
      }
    }
    return neg ? -v : v;
  }

  double parse_term() {
    if (cur_.type == Token::Number) {
      double v;
      try {
        v = std::stod(cur_.text);
      } catch (...) {
        throw ParseError(cur_.span, ParseErrorKind::Syntax, "bad number '" + cur_.text + "'");
      }
      advance();
      return v;
    }
    if (cur_.type == Token::Ident && cur_.text == "pi") {
      advance();
      return kPi;
    }
    if (cur_.type == Token::Punct && cur_.text == "(") {
      advance();
      double v = parse_expr();
      expect_punct(")");
      return v;
    }
    throw ParseError(cur_.span, ParseErrorKind::Syntax,
                     "expected a number or 'pi', got '" + cur_.text + "'");
  }

  void advance() { cur_ = lex_.next(); }
  void expect_punct(const std::string& p) {
    if (cur_.type != Token::Punct || cur_.text != p)
      throw ParseError(cur_.span, ParseErrorKind::Syntax,
                       "expected '" + p + "', got '" + cur_.text + "'");
    advance();
  }
  std::string expect_ident(const std::string& what) {
    if (cur_.type != Token::Ident)
      throw ParseError(cur_.span, ParseErrorKind::Syntax,
                       "expected " + what + ", got '" + cur_.text + "'");
    std::string s = cur_.text;
    advance();
    return s;
  }
  double expect_number(const std::string& what) {
    if (cur_.type != Token::Number)
      throw ParseError(cur_.span, ParseErrorKind::Syntax,
                       "expected " + what + ", got '" + cur_.text + "'");
    double v = std::stod(cur_.text);
    advance();
    return v;
  }
  int expect_int(const std::string& what) {
    Token t = cur_;
    double v = expect_number(what);
    int i = static_cast<int>(v);
    if (v != i) throw ParseError(t.span, ParseErrorKind::Syntax, "expected an integer");
    return i;
  }

  Lexer lex_;
  Token cur_;
  std::string reg_name_;
};

}  // namespace qasm_detail

/// Parses the supported OpenQASM 2.0 subset: one qreg and the gates
/// h s sdg x y z rz(expr) cx cz, with expressions over decimal literals,
/// pi, *, / and unary minus. rz angles come out reduced to [0, 2pi).
inline Circuit parse_qasm(const std::string& text) {
  return qasm_detail::Parser(text).parse_program();
}

/// Prints a circuit back into the QASM subset. Only the input gate set is
/// representable; anything else is rejected.
inline std::string to_qasm(const Circuit& c) {
  if (c.output_relabeling) throw Error("relabeled circuits have no QASM form");
  std::ostringstream os;
  os << "OPENQASM 2.0;\n";
  os << "qreg q[" << c.num_qubits << "];\n";
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::H:
      case GateKind::S:
      case GateKind::Sdg:
      case GateKind::X:
      case GateKind::Y:
      case GateKind::Z:
        os << gate_kind_name(g.kind) << " q[" << g.qubit() << "];\n";
        break;
      case GateKind::Rz: {
        os.precision(17);
        os << "rz(" << g.angle.radians() << ") q[" << g.qubit() << "];\n";
        break;
      }
      case GateKind::Cnot:
        os << "cx q[" << g.control() << "],q[" << g.target() << "];\n";
        break;
      case GateKind::Cz:
        os << "cz q[" << g.qubits[0] << "],q[" << g.qubits[1] << "];\n";
        break;
      default:
        throw Error(std::string("gate has no QASM spelling: ") + gate_kind_name(g.kind));
    }
  }
  return os.str();
}

}  // namespace gmsc
