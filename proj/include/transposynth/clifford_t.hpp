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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "transposynth/circuit.hpp"

namespace transposynth {

enum class ToffoliOrientation { standard, inverted };

namespace detail {

inline std::vector<Gate> toffoli_standard(unsigned c1, unsigned c2, unsigned t) {
  return {Gate::h(t),          Gate::cnot(c2, t), Gate::tdg(t),       Gate::cnot(c1, t),
          Gate::t(t),          Gate::cnot(c2, t), Gate::tdg(t),       Gate::cnot(c1, t),
          Gate::tdg(c2),       Gate::t(t),        Gate::cnot(c1, c2), Gate::h(t),
          Gate::tdg(c2),       Gate::cnot(c1, c2), Gate::t(c1),       Gate::s(c2)};
}

inline ToffoliOrientation flip(ToffoliOrientation o) {
  return o == ToffoliOrientation::standard ? ToffoliOrientation::inverted
                                           : ToffoliOrientation::standard;
}

}  // namespace detail

/**
 * Clifford+T expansion of one Toffoli: 6 CNOT, 2 H, 7 T/Tdg and 1 S.
 * The inverted orientation is the standard sequence reversed with every gate
 * inverted, so a standard copy followed by an inverted copy cancels.
 */
inline Circuit lower_toffoli(const Gate& gate,
                             ToffoliOrientation orientation = ToffoliOrientation::standard) {
  if (gate.kind() != GateKind::Toffoli) {
    throw CircuitError("lower_toffoli expects a Toffoli, got " +
                       std::string(kind_name(gate.kind())));
  }
  const unsigned c1 = gate.controls()[0].index, c2 = gate.controls()[1].index,
                 t = gate.target().index;
  Circuit c(gate.max_index() + 1);
  c.append(detail::toffoli_standard(c1, c2, t));
  return orientation == ToffoliOrientation::standard ? c : inverse(c);
}

enum class ToffoliPairing { naive, inverse_aware };

inline std::string_view pairing_name(ToffoliPairing p) {
  return p == ToffoliPairing::naive ? "naive" : "inverse_aware";
}

/**
 * Expands every Toffoli. `naive` uses the standard orientation throughout.
 * `inverse_aware` looks back from each Toffoli for an earlier one on the same
 * control pair and target that can slide next to it (no gate in between
 * touches either control); the later one then takes the opposite orientation
 * and the earlier one's control order, so the facing halves cancel under
 * remove_redundancies.
 */
inline Circuit lower_all_toffolis(const Circuit& circuit,
                                  ToffoliPairing pairing = ToffoliPairing::naive) {
  const auto& gates = circuit.gates();
  std::vector<ToffoliOrientation> orient(gates.size(), ToffoliOrientation::standard);
  std::vector<std::optional<Gate>> as_lowered(gates.size());
  Circuit out = circuit.empty_copy();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    if (g.kind() == GateKind::MCX) {
      throw CircuitError("MCX gates must be lowered before Clifford+T expansion");
    }
    if (g.kind() != GateKind::Toffoli) {
      out.append(g);
      continue;
    }
    Gate use = g;
    if (pairing == ToffoliPairing::inverse_aware) {
      for (std::size_t k = i; k-- > 0;) {
        const Gate& prev = gates[k];
        if (prev.kind() == GateKind::Toffoli && prev.same_action(g)) {
          orient[i] = detail::flip(orient[k]);
          use = *as_lowered[k];
          break;
        }
        if (prev.touches(g.controls()[0]) || prev.touches(g.controls()[1])) break;
      }
    }
    as_lowered[i] = use;
    out.append(lower_toffoli(use, orient[i]).gates());
  }
  return out;
}

}  // namespace transposynth
