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
#include <vector>

#include "transposynth/circuit.hpp"

namespace transposynth {

namespace detail {

// T.T -> S and Tdg.Tdg -> Sdg on the same qubit.
inline std::optional<Gate> fuse(const Gate& earlier, const Gate& later) {
  if (earlier.target() != later.target() || earlier.kind() != later.kind()) {
    return std::nullopt;
  }
  if (earlier.kind() == GateKind::T) return Gate::s(later.target().index);
  if (earlier.kind() == GateKind::Tdg) return Gate::sdg(later.target().index);
  return std::nullopt;
}

// One left-to-right sweep. Each qubit keeps a stack of the surviving gates
// on it; an incoming gate meets its partner exactly when the same gate tops
// the stack of every qubit it touches.
inline std::vector<Gate> sweep_redundancies(const std::vector<Gate>& in,
                                            unsigned num_qubits) {
  std::vector<Gate> kept;
  std::vector<bool> alive;
  std::vector<std::vector<std::size_t>> stacks(num_qubits);

  auto partner = [&](const Gate& g) -> std::optional<std::size_t> {
    std::optional<std::size_t> idx;
    for (QubitId q : g.support()) {
      if (stacks[q.index].empty()) return std::nullopt;
      std::size_t top = stacks[q.index].back();
      if (idx && *idx != top) return std::nullopt;
      idx = top;
    }
    return idx;
  };
  auto drop = [&](std::size_t idx) {
    alive[idx] = false;
    for (QubitId q : kept[idx].support()) stacks[q.index].pop_back();
  };

  for (const Gate& original : in) {
    std::optional<Gate> pending = original;
    while (pending) {
      Gate g = *pending;
      pending.reset();
      if (auto p = partner(g)) {
        const Gate& h = kept[*p];
        if (h.same_action(g.inverse())) {
          drop(*p);
          continue;
        }
        if (auto fused = fuse(h, g)) {
          drop(*p);
          pending = fused;
          continue;
        }
      }
      for (QubitId q : g.support()) stacks[q.index].push_back(kept.size());
      kept.push_back(g);
      alive.push_back(true);
    }
  }
  std::vector<Gate> out;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (alive[i]) out.push_back(kept[i]);
  }
  return out;
}

}  // namespace detail

/**
 * Cancels each gate against the nearest later inverse on the same qubits when
 * every gate in between acts on other qubits, fuses T.T into S and Tdg.Tdg
 * into Sdg, and repeats until nothing changes.
 */
inline Circuit remove_redundancies(const Circuit& circuit) {
  std::vector<Gate> gates = circuit.gates();
  for (;;) {
    std::vector<Gate> next = detail::sweep_redundancies(gates, circuit.num_qubits());
    if (next.size() == gates.size()) break;
    gates = std::move(next);
  }
  Circuit out = circuit.empty_copy();
  out.append(gates);
  return out;
}

}  // namespace transposynth
