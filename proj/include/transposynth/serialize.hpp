// Copyright 2026 The transposynth Authors
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
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "transposynth/circuit.hpp"

namespace transposynth {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class CircuitFormat { text, qasm2 };

namespace detail {

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline unsigned parse_index(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(line, "expected a qubit index, got '" + tok + "'");
  }
  try {
    return static_cast<unsigned>(std::stoul(tok));
  } catch (const std::out_of_range&) {
    throw ParseError(line, "qubit index out of range: " + tok);
  }
}

inline std::string_view qasm_name(GateKind kind) {
  switch (kind) {
    case GateKind::H:
      return "h";
    case GateKind::X:
      return "x";
    case GateKind::T:
      return "t";
    case GateKind::Tdg:
      return "tdg";
    case GateKind::S:
      return "s";
    case GateKind::Sdg:
      return "sdg";
    case GateKind::CNOT:
      return "cx";
    case GateKind::Toffoli:
      return "ccx";
    case GateKind::MCX:
      break;
  }
  throw CircuitError("MCX has no OpenQASM 2.0 form; lower it first");
}

inline std::string write_text(const Circuit& c) {
  std::string out = "qubits " + std::to_string(c.num_qubits()) + "\n";
  for (unsigned i = 0; i < c.num_qubits(); ++i) {
    out += "role " + std::to_string(i) + " ";
    out += role_name(c.roles()[i]);
    out += "\n";
  }
  for (const Gate& g : c.gates()) {
    out += kind_name(g.kind());
    for (QubitId q : g.controls()) out += " " + std::to_string(q.index);
    out += " " + std::to_string(g.target().index) + "\n";
  }
  return out;
}

inline std::string write_qasm2(const Circuit& c) {
  for (const Gate& g : c.gates()) {
    if (g.kind() == GateKind::MCX) {
      throw CircuitError("MCX has no OpenQASM 2.0 form; lower it first");
    }
  }
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  // Roles ride along as comments so the reader can restore them.
  for (unsigned i = 0; i < c.num_qubits(); ++i) {
    if (c.roles()[i] != QubitRole::data) {
      out += "// role " + std::to_string(i) + " ";
      out += role_name(c.roles()[i]);
      out += "\n";
    }
  }
  out += "qreg q[" + std::to_string(c.num_qubits()) + "];\n";
  for (const Gate& g : c.gates()) {
    out += qasm_name(g.kind());
    out += " ";
    bool first = true;
    for (QubitId q : g.support()) {
      if (!first) out += ",";
      out += "q[" + std::to_string(q.index) + "]";
      first = false;
    }
    out += ";\n";
  }
  return out;
}

}  // namespace detail

/**
 * Text format: a `qubits N` header, one `role i data|clean|borrowed` line per
 * qubit, then one `KIND c1 c2 ... target` line per gate. OpenQASM 2.0 output
 * uses h, x, t, tdg, s, sdg, cx and ccx over a single register `q`.
 */
inline std::string serialize(const Circuit& circuit,
                             CircuitFormat format = CircuitFormat::text) {
  return format == CircuitFormat::text ? detail::write_text(circuit)
                                       : detail::write_qasm2(circuit);
}

/** Reads the text format. Blank lines and `#` comments are ignored. */
inline Circuit parse_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::optional<Circuit> circuit;
  std::vector<bool> role_seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tok = detail::split_ws(line);
    if (tok.empty()) continue;
    if (!circuit) {
      if (tok[0] != "qubits" || tok.size() != 2) {
        throw ParseError(lineno, "expected 'qubits N' header");
      }
      unsigned n = detail::parse_index(tok[1], lineno);
      if (n == 0) throw ParseError(lineno, "register must have at least one qubit");
      circuit.emplace(n);
      role_seen.assign(n, false);
      continue;
    }
    if (tok[0] == "role") {
      if (tok.size() != 3) throw ParseError(lineno, "expected 'role i data|clean|borrowed'");
      unsigned q = detail::parse_index(tok[1], lineno);
      auto role = role_from_name(tok[2]);
      if (!role) throw ParseError(lineno, "unknown role '" + tok[2] + "'");
      if (q >= circuit->num_qubits()) throw ParseError(lineno, "role for qubit out of range");
      circuit->set_role(QubitId{q}, *role);
      role_seen[q] = true;
      continue;
    }
    auto kind = kind_from_name(tok[0]);
    if (!kind) throw ParseError(lineno, "unknown gate '" + tok[0] + "'");
    if (tok.size() < 2) throw ParseError(lineno, "gate without qubits");
    QubitList controls;
    for (std::size_t i = 1; i + 1 < tok.size(); ++i) {
      controls.emplace_back(detail::parse_index(tok[i], lineno));
    }
    QubitId target{detail::parse_index(tok.back(), lineno)};
    try {
      circuit->append(Gate(*kind, std::move(controls), target));
    } catch (const CircuitError& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (!circuit) throw ParseError(lineno, "missing 'qubits N' header");
  return *circuit;
}

/**
 * Reads the OpenQASM 2.0 subset this library writes: one `qreg`, the gates
 * h, x, t, tdg, s, sdg, cx, ccx, and optional `// role i kind` comments.
 */
inline Circuit parse_qasm2(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::optional<Circuit> circuit;
  std::string reg;
  std::vector<std::pair<unsigned, QubitRole>> pending_roles;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto c = line.find("//"); c != std::string::npos) {
      auto tok = detail::split_ws(std::string_view(line).substr(c + 2));
      if (tok.size() == 3 && tok[0] == "role") {
        auto role = role_from_name(tok[2]);
        if (!role) throw ParseError(lineno, "unknown role '" + tok[2] + "'");
        pending_roles.emplace_back(detail::parse_index(tok[1], lineno), *role);
      }
      line.erase(c);
    }
    std::string_view body = line;
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) {
      body.remove_suffix(1);
    }
    auto tok = detail::split_ws(body);
    if (tok.empty()) continue;
    if (body.back() != ';') throw ParseError(lineno, "statement must end with ';'");
    body.remove_suffix(1);
    if (!header) {
      if (body.find("OPENQASM 2.0") == std::string_view::npos) {
        throw ParseError(lineno, "expected 'OPENQASM 2.0;'");
      }
      header = true;
      continue;
    }
    if (tok[0] == "include") continue;
    if (tok[0] == "qreg") {
      if (circuit) throw ParseError(lineno, "only one quantum register is supported");
      auto open = body.find('['), close = body.find(']');
      if (open == std::string_view::npos || close == std::string_view::npos) {
        throw ParseError(lineno, "malformed qreg");
      }
      reg = detail::split_ws(body.substr(4, open - 4)).at(0);
      unsigned n = detail::parse_index(std::string(body.substr(open + 1, close - open - 1)), lineno);
      if (n == 0) throw ParseError(lineno, "register must have at least one qubit");
      circuit.emplace(n);
      continue;
    }
    if (!circuit) throw ParseError(lineno, "gate before qreg");
    auto space = body.find_first_of(" \t");
    if (space == std::string_view::npos) throw ParseError(lineno, "gate without operands");
    std::string name(body.substr(0, space));
    std::optional<GateKind> kind;
    for (GateKind k : {GateKind::H, GateKind::X, GateKind::T, GateKind::Tdg,
                       GateKind::S, GateKind::Sdg, GateKind::CNOT, GateKind::Toffoli}) {
      if (detail::qasm_name(k) == name) kind = k;
    }
    if (!kind) throw ParseError(lineno, "unsupported gate '" + name + "'");
    QubitList operands;
    std::string_view rest = body.substr(space);
    std::size_t pos = 0;
    while ((pos = rest.find('[')) != std::string_view::npos) {
      auto close = rest.find(']', pos);
      if (close == std::string_view::npos) throw ParseError(lineno, "missing ']'");
      auto name_part = detail::split_ws(rest.substr(0, pos));
      std::string r = name_part.empty() ? "" : name_part.back();
      if (!r.empty() && r.front() == ',') r.erase(0, 1);
      if (r != reg) throw ParseError(lineno, "unknown register '" + r + "'");
      operands.emplace_back(detail::parse_index(std::string(rest.substr(pos + 1, close - pos - 1)), lineno));
      rest = rest.substr(close + 1);
    }
    if (operands.empty()) throw ParseError(lineno, "gate without operands");
    QubitId target = operands.back();
    operands.pop_back();
    try {
      circuit->append(Gate(*kind, std::move(operands), target));
    } catch (const CircuitError& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (!circuit) throw ParseError(lineno, "missing qreg");
  for (auto [q, role] : pending_roles) {
    if (q >= circuit->num_qubits()) throw ParseError(lineno, "role for qubit out of range");
    circuit->set_role(QubitId{q}, role);
  }
  return *circuit;
}

/** Dispatches on content: OpenQASM if it starts with `OPENQASM`. */
inline Circuit parse_circuit(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text.substr(first).starts_with("OPENQASM")) {
    return parse_qasm2(text);
  }
  return parse_text(text);
}

}  // namespace transposynth
