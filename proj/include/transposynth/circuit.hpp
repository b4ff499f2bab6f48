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

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace transposynth {

/** Raised for malformed gates, out-of-range qubits and similar misuse. */
class CircuitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/** Zero-based position of a qubit in a register. */
struct QubitId {
  unsigned index = 0;

  constexpr QubitId() = default;
  constexpr explicit QubitId(unsigned i) : index(i) {}

  friend constexpr auto operator<=>(QubitId, QubitId) = default;
};

using QubitList = std::vector<QubitId>;

/** Convenience for building qubit lists from plain indices. */
inline QubitList qubits(std::initializer_list<unsigned> indices) {
  QubitList out;
  out.reserve(indices.size());
  for (unsigned i : indices) out.emplace_back(i);
  return out;
}

enum class GateKind { H, X, T, Tdg, S, Sdg, CNOT, Toffoli, MCX };

inline constexpr std::string_view kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::H:
      return "H";
    case GateKind::X:
      return "X";
    case GateKind::T:
      return "T";
    case GateKind::Tdg:
      return "Tdg";
    case GateKind::S:
      return "S";
    case GateKind::Sdg:
      return "Sdg";
    case GateKind::CNOT:
      return "CNOT";
    case GateKind::Toffoli:
      return "Toffoli";
    case GateKind::MCX:
      return "MCX";
  }
  return "?";
}

inline std::optional<GateKind> kind_from_name(std::string_view name) {
  for (GateKind k :
       {GateKind::H, GateKind::X, GateKind::T, GateKind::Tdg, GateKind::S,
        GateKind::Sdg, GateKind::CNOT, GateKind::Toffoli, GateKind::MCX}) {
    if (kind_name(k) == name) return k;
  }
  return std::nullopt;
}

/** True for kinds that only permute computational basis states. */
inline constexpr bool is_permutation_kind(GateKind kind) {
  return kind == GateKind::X || kind == GateKind::CNOT ||
         kind == GateKind::Toffoli || kind == GateKind::MCX;
}

inline constexpr bool is_self_inverse(GateKind kind) {
  return kind == GateKind::H || is_permutation_kind(kind);
}

inline constexpr GateKind inverse_kind(GateKind kind) {
  switch (kind) {
    case GateKind::T:
      return GateKind::Tdg;
    case GateKind::Tdg:
      return GateKind::T;
    case GateKind::S:
      return GateKind::Sdg;
    case GateKind::Sdg:
      return GateKind::S;
    default:
      return kind;
  }
}

/**
 * A single gate instance. Arity is fixed by kind: single-qubit kinds have no
 * controls, CNOT one, Toffoli two, MCX one or more. Controls and target are
 * pairwise distinct. Instances are validated on construction.
 */
class Gate {
 public:
  Gate(GateKind kind, QubitList controls, QubitId target)
      : kind_(kind), controls_(std::move(controls)), target_(target) {
    validate();
  }

  static Gate h(unsigned q) { return {GateKind::H, {}, QubitId{q}}; }
  static Gate x(unsigned q) { return {GateKind::X, {}, QubitId{q}}; }
  static Gate t(unsigned q) { return {GateKind::T, {}, QubitId{q}}; }
  static Gate tdg(unsigned q) { return {GateKind::Tdg, {}, QubitId{q}}; }
  static Gate s(unsigned q) { return {GateKind::S, {}, QubitId{q}}; }
  static Gate sdg(unsigned q) { return {GateKind::Sdg, {}, QubitId{q}}; }
  static Gate cnot(unsigned c, unsigned t) {
    return {GateKind::CNOT, {QubitId{c}}, QubitId{t}};
  }
  static Gate toffoli(unsigned c1, unsigned c2, unsigned t) {
    return {GateKind::Toffoli, {QubitId{c1}, QubitId{c2}}, QubitId{t}};
  }
  static Gate mcx(QubitList controls, QubitId target) {
    return {GateKind::MCX, std::move(controls), target};
  }

  GateKind kind() const { return kind_; }
  const QubitList& controls() const { return controls_; }
  QubitId target() const { return target_; }

  /** Controls followed by the target. */
  QubitList support() const {
    QubitList out = controls_;
    out.push_back(target_);
    return out;
  }

  bool touches(QubitId q) const {
    return q == target_ ||
           std::find(controls_.begin(), controls_.end(), q) != controls_.end();
  }

  bool overlaps(const Gate& other) const {
    for (QubitId q : other.support()) {
      if (touches(q)) return true;
    }
    return false;
  }

  /** Largest qubit index referenced by this gate. */
  unsigned max_index() const {
    unsigned m = target_.index;
    for (QubitId c : controls_) m = std::max(m, c.index);
    return m;
  }

  Gate inverse() const { return {inverse_kind(kind_), controls_, target_}; }

  /**
   * Same kind, same target and the same control set. Toffoli and MCX controls
   * compare as unordered sets since those gates are symmetric in them.
   */
  bool same_action(const Gate& other) const {
    if (kind_ != other.kind_ || target_ != other.target_) return false;
    if (controls_.size() != other.controls_.size()) return false;
    if (kind_ == GateKind::Toffoli || kind_ == GateKind::MCX) {
      QubitList lhs = controls_, rhs = other.controls_;
      std::sort(lhs.begin(), lhs.end());
      std::sort(rhs.begin(), rhs.end());
      return lhs == rhs;
    }
    return controls_ == other.controls_;
  }

  friend bool operator==(const Gate&, const Gate&) = default;

 private:
  void validate() const {
    const std::size_t n = controls_.size();
    bool ok = true;
    switch (kind_) {
      case GateKind::CNOT:
        ok = n == 1;
        break;
      case GateKind::Toffoli:
        ok = n == 2;
        break;
      case GateKind::MCX:
        ok = n >= 1;
        break;
      default:
        ok = n == 0;
    }
    if (!ok) {
      throw CircuitError(
          "wrong arity for " + std::string(kind_name(kind_)) + ": " +
          std::to_string(n) + " controls");
    }
    QubitList all = support();
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
      throw CircuitError(
          "duplicate qubit in " + std::string(kind_name(kind_)) + " gate");
    }
  }

  GateKind kind_;
  QubitList controls_;
  QubitId target_;
};

enum class QubitRole { data, clean_ancilla, borrowed_ancilla };

inline constexpr std::string_view role_name(QubitRole role) {
  switch (role) {
    case QubitRole::data:
      return "data";
    case QubitRole::clean_ancilla:
      return "clean";
    case QubitRole::borrowed_ancilla:
      return "borrowed";
  }
  return "?";
}

inline std::optional<QubitRole> role_from_name(std::string_view name) {
  if (name == "data") return QubitRole::data;
  if (name == "clean") return QubitRole::clean_ancilla;
  if (name == "borrowed") return QubitRole::borrowed_ancilla;
  return std::nullopt;
}

/**
 * An ordered gate list over a fixed-size register. Every qubit carries a
 * role; clean ancillas enter and leave in |0>, borrowed ones are restored.
 */
class Circuit {
 public:
  explicit Circuit(unsigned num_qubits)
      : Circuit(num_qubits, std::vector<QubitRole>(num_qubits, QubitRole::data)) {}

  Circuit(unsigned num_qubits, std::vector<QubitRole> roles)
      : num_qubits_(num_qubits), roles_(std::move(roles)) {
    if (num_qubits_ == 0) throw CircuitError("circuit needs at least one qubit");
    if (roles_.size() != num_qubits_) {
      throw CircuitError("role list length does not match register size");
    }
  }

  unsigned num_qubits() const { return num_qubits_; }
  const std::vector<QubitRole>& roles() const { return roles_; }
  QubitRole role(QubitId q) const { return roles_.at(q.index); }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  void set_role(QubitId q, QubitRole role) {
    check_range(q);
    roles_[q.index] = role;
  }

  /** Qubits carrying `role`, in ascending order. */
  QubitList qubits_with_role(QubitRole role) const {
    QubitList out;
    for (unsigned i = 0; i < num_qubits_; ++i) {
      if (roles_[i] == role) out.emplace_back(i);
    }
    return out;
  }

  Circuit& append(Gate gate) {
    for (QubitId q : gate.support()) check_range(q);
    gates_.push_back(std::move(gate));
    return *this;
  }

  /** Appends every gate of `other`, keeping qubit indices as they are. */
  Circuit& append(const Circuit& other) {
    return append(std::span<const Gate>(other.gates_));
  }

  Circuit& append(std::span<const Gate> gates) {
    for (const Gate& g : gates) append(g);
    return *this;
  }

  /** Grows the register by `count` qubits of the given role. */
  Circuit& add_qubits(unsigned count, QubitRole role) {
    num_qubits_ += count;
    roles_.resize(num_qubits_, role);
    return *this;
  }

  /** Copy with the same register and no gates. */
  Circuit empty_copy() const { return Circuit(num_qubits_, roles_); }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  void check_range(QubitId q) const {
    if (q.index >= num_qubits_) {
      throw CircuitError(
          "qubit " + std::to_string(q.index) + " out of range for " +
          std::to_string(num_qubits_) + "-qubit register");
    }
  }

  unsigned num_qubits_;
  std::vector<QubitRole> roles_;
  std::vector<Gate> gates_;
};

/** Smallest all-data register able to hold `gates`, with the gates appended. */
inline Circuit circuit_from_gates(std::span<const Gate> gates,
                                  unsigned min_qubits = 1) {
  unsigned n = min_qubits;
  for (const Gate& g : gates) n = std::max(n, g.max_index() + 1);
  Circuit c(n);
  c.append(gates);
  return c;
}

inline Circuit append_gate(Circuit circuit, Gate gate) {
  circuit.append(std::move(gate));
  return circuit;
}

/** Gates of `first` then `second`; both must share the register. */
inline Circuit concat(const Circuit& first, const Circuit& second) {
  if (first.num_qubits() != second.num_qubits()) {
    throw CircuitError("cannot concatenate circuits over different registers");
  }
  Circuit out = first;
  out.append(second);
  return out;
}

/** Reversed gate order with every gate replaced by its inverse. */
inline Circuit inverse(const Circuit& circuit) {
  Circuit out = circuit.empty_copy();
  const auto& gates = circuit.gates();
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    out.append(it->inverse());
  }
  return out;
}

struct GateCounts {
  std::size_t h = 0;
  std::size_t x = 0;
  std::size_t cnot = 0;
  std::size_t toffoli = 0;
  std::size_t mcx = 0;
  std::size_t t_type = 0;
  std::size_t s_type = 0;
  std::size_t total = 0;

  friend bool operator==(const GateCounts&, const GateCounts&) = default;

  GateCounts& operator+=(const GateCounts& o) {
    h += o.h;
    x += o.x;
    cnot += o.cnot;
    toffoli += o.toffoli;
    mcx += o.mcx;
    t_type += o.t_type;
    s_type += o.s_type;
    total += o.total;
    return *this;
  }
};

inline GateCounts count_gates(std::span<const Gate> gates) {
  GateCounts c;
  for (const Gate& g : gates) {
    switch (g.kind()) {
      case GateKind::H:
        ++c.h;
        break;
      case GateKind::X:
        ++c.x;
        break;
      case GateKind::T:
      case GateKind::Tdg:
        ++c.t_type;
        break;
      case GateKind::S:
      case GateKind::Sdg:
        ++c.s_type;
        break;
      case GateKind::CNOT:
        ++c.cnot;
        break;
      case GateKind::Toffoli:
        ++c.toffoli;
        break;
      case GateKind::MCX:
        ++c.mcx;
        break;
    }
  }
  c.total = c.h + c.x + c.cnot + c.toffoli + c.mcx + c.t_type + c.s_type;
  return c;
}

inline GateCounts count_gates(const Circuit& circuit) {
  return count_gates(std::span<const Gate>(circuit.gates()));
}

}  // namespace transposynth
