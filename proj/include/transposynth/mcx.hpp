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
#include <string>
#include <vector>

#include "transposynth/circuit.hpp"

namespace transposynth {

enum class AncillaKind { borrowed, clean };

/**
 * Qubit assignment for one C^nX decomposition: controls x_1..x_n, target
 * x_{n+1} and the helper qubits a_1, a_2, ... in the order the construction
 * consumes them.
 */
struct McxLayout {
  QubitList controls;
  QubitId target;
  QubitList ancillas;
  AncillaKind ancilla_kind = AncillaKind::borrowed;

  unsigned num_controls() const { return static_cast<unsigned>(controls.size()); }

  QubitList all_qubits() const {
    QubitList out = controls;
    out.push_back(target);
    out.insert(out.end(), ancillas.begin(), ancillas.end());
    return out;
  }

  unsigned max_index() const {
    unsigned m = 0;
    for (QubitId q : all_qubits()) m = std::max(m, q.index);
    return m;
  }
};

namespace detail {

inline void check_layout(const McxLayout& layout, std::size_t want_ancillas,
                         const char* what) {
  const unsigned n = layout.num_controls();
  if (n < 3) {
    throw CircuitError(std::string(what) + " needs at least 3 controls, got " +
                       std::to_string(n));
  }
  if (layout.ancillas.size() != want_ancillas) {
    throw CircuitError(std::string(what) + " needs " +
                       std::to_string(want_ancillas) + " ancillas, got " +
                       std::to_string(layout.ancillas.size()));
  }
  QubitList all = layout.all_qubits();
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw CircuitError(std::string(what) + ": overlapping qubits in layout");
  }
}

// Borrowed-ancilla ladder, appended in time order. Writing
// V(k) = Tof(a_{k-1}, x_{k+1}, a_k), one half is
//   Tof(a_{n-2}, x_n, t), V(n-2) .. V(2), Tof(x_1, x_2, a_1), V(2) .. V(n-2)
// and the whole circuit is that half twice (4n - 8 gates).
inline void emit_borrowed(const QubitList& x, QubitId target,
                          const QubitList& a, std::vector<Gate>& out) {
  const std::size_t n = x.size();
  auto ladder = [&](std::size_t k) {  // V(k), 1-based k in [2, n-2]
    out.push_back(Gate::toffoli(a[k - 2].index, x[k].index, a[k - 1].index));
  };
  for (int rep = 0; rep < 2; ++rep) {
    out.push_back(Gate::toffoli(a[n - 3].index, x[n - 1].index, target.index));
    for (std::size_t k = n - 2; k >= 2; --k) ladder(k);
    out.push_back(Gate::toffoli(x[0].index, x[1].index, a[0].index));
    for (std::size_t k = 2; k <= n - 2; ++k) ladder(k);
  }
}

// Clean-ancilla pyramid: compute the running AND into a_1..a_{n-2}, hit the
// target once, uncompute (2n - 3 gates).
inline void emit_clean_ladder(const QubitList& x, QubitId target,
                              const QubitList& a, std::vector<Gate>& out) {
  const std::size_t n = x.size();
  out.push_back(Gate::toffoli(x[0].index, x[1].index, a[0].index));
  for (std::size_t k = 2; k <= n - 2; ++k) {
    out.push_back(Gate::toffoli(a[k - 2].index, x[k].index, a[k - 1].index));
  }
  out.push_back(Gate::toffoli(a[n - 3].index, x[n - 1].index, target.index));
  for (std::size_t k = n - 2; k >= 2; --k) {
    out.push_back(Gate::toffoli(a[k - 2].index, x[k].index, a[k - 1].index));
  }
  out.push_back(Gate::toffoli(x[0].index, x[1].index, a[0].index));
}

// C^kX for any k >= 1 given a pool of at least k - 2 borrowable qubits.
inline void emit_small_or_borrowed(const QubitList& x, QubitId target,
                                   const QubitList& pool,
                                   std::vector<Gate>& out) {
  if (x.size() == 1) {
    out.push_back(Gate::cnot(x[0].index, target.index));
  } else if (x.size() == 2) {
    out.push_back(Gate::toffoli(x[0].index, x[1].index, target.index));
  } else {
    QubitList a(pool.begin(), pool.begin() + static_cast<long>(x.size() - 2));
    emit_borrowed(x, target, a, out);
  }
}

// Lowest-indexed `count` qubits of `candidates`.
inline QubitList lowest(QubitList candidates, std::size_t count) {
  std::sort(candidates.begin(), candidates.end());
  candidates.resize(count);
  return candidates;
}

// Split construction around one clean ancilla c:
//   C^{n0}X(x -> c); C^{n1+1}X(y, c -> t); C^{n0}X(x -> c)
// with n0 = ceil(n/2), n1 = floor(n/2). Each inner gate borrows from the
// qubits the other block leaves idle.
inline void emit_single_clean(const QubitList& controls, QubitId target,
                              QubitId clean, std::vector<Gate>& out) {
  const std::size_t n = controls.size();
  const std::size_t n0 = (n + 1) / 2;
  QubitList x(controls.begin(), controls.begin() + static_cast<long>(n0));
  QubitList y(controls.begin() + static_cast<long>(n0), controls.end());

  QubitList x_pool = y;
  x_pool.push_back(target);
  x_pool = lowest(x_pool, x.size() >= 3 ? x.size() - 2 : 0);

  QubitList y_controls = y;
  y_controls.push_back(clean);
  QubitList y_pool =
      lowest(x, y_controls.size() >= 3 ? y_controls.size() - 2 : 0);

  emit_small_or_borrowed(x, clean, x_pool, out);
  emit_small_or_borrowed(y_controls, target, y_pool, out);
  emit_small_or_borrowed(x, clean, x_pool, out);
}

}  // namespace detail

/**
 * C^nX from exactly 4n - 8 Toffolis using n - 2 borrowed ancillas, which may
 * hold any value and are restored. Requires n >= 3.
 */
inline Circuit mcx_borrowed(const McxLayout& layout) {
  detail::check_layout(layout, layout.controls.size() - 2, "mcx_borrowed");
  std::vector<Gate> gates;
  detail::emit_borrowed(layout.controls, layout.target, layout.ancillas, gates);
  Circuit c(layout.max_index() + 1);
  for (QubitId a : layout.ancillas) c.set_role(a, QubitRole::borrowed_ancilla);
  c.append(gates);
  return c;
}

/**
 * C^nX with one clean ancilla: 3 Toffolis for n = 3, 6 for n = 4 and at most
 * 6n - 18 beyond (6n - 20 when n is even).
 */
inline Circuit mcx_single_clean(const McxLayout& layout) {
  detail::check_layout(layout, 1, "mcx_single_clean");
  std::vector<Gate> gates;
  detail::emit_single_clean(layout.controls, layout.target, layout.ancillas[0],
                            gates);
  Circuit c(layout.max_index() + 1);
  c.set_role(layout.ancillas[0], QubitRole::clean_ancilla);
  c.append(gates);
  return c;
}

/**
 * C^nX from 2n - 3 Toffolis with n - 2 clean ancillas. Ancillas that do not
 * start in |0> are not guaranteed anything.
 */
inline Circuit mcx_clean_ladder(const McxLayout& layout) {
  detail::check_layout(layout, layout.controls.size() - 2, "mcx_clean_ladder");
  std::vector<Gate> gates;
  detail::emit_clean_ladder(layout.controls, layout.target, layout.ancillas,
                            gates);
  Circuit c(layout.max_index() + 1);
  for (QubitId a : layout.ancillas) c.set_role(a, QubitRole::clean_ancilla);
  c.append(gates);
  return c;
}

enum class McxStrategy { borrowed, single_clean, clean_ladder };

/** Ancillas a C^kX needs under `strategy`; zero below three controls. */
inline std::size_t ancillas_needed(McxStrategy strategy, std::size_t controls) {
  if (controls < 3) return 0;
  return strategy == McxStrategy::single_clean ? 1 : controls - 2;
}

/**
 * Replaces every MCX gate by Toffolis. One and two controls become a CNOT or
 * a Toffoli directly. Otherwise ancillas are taken from the front of `pool`,
 * which must not overlap the gate. For clean strategies the pool qubits must
 * be clean ancillas of the circuit; the borrowed strategy tops up a short pool
 * with the lowest-indexed qubits the gate does not touch.
 */
inline Circuit lower_mcx(const Circuit& circuit, McxStrategy strategy,
                         const QubitList& pool) {
  for (QubitId q : pool) {
    if (q.index >= circuit.num_qubits()) {
      throw CircuitError("ancilla pool qubit out of range");
    }
    if (strategy != McxStrategy::borrowed &&
        circuit.role(q) != QubitRole::clean_ancilla) {
      throw CircuitError("qubit " + std::to_string(q.index) +
                         " in the pool is not a clean ancilla");
    }
  }
  Circuit out = circuit.empty_copy();
  std::vector<Gate> buf;
  for (const Gate& g : circuit.gates()) {
    if (g.kind() != GateKind::MCX) {
      out.append(g);
      continue;
    }
    const QubitList& x = g.controls();
    buf.clear();
    if (x.size() < 3) {
      detail::emit_small_or_borrowed(x, g.target(), {}, buf);
      out.append(buf);
      continue;
    }
    for (QubitId q : pool) {
      if (g.touches(q)) {
        throw CircuitError("ancilla pool overlaps MCX qubit " +
                           std::to_string(q.index));
      }
    }
    const std::size_t need = ancillas_needed(strategy, x.size());
    QubitList anc(pool.begin(),
                  pool.begin() + static_cast<long>(std::min(need, pool.size())));
    if (anc.size() < need && strategy == McxStrategy::borrowed) {
      for (unsigned i = 0; i < circuit.num_qubits() && anc.size() < need; ++i) {
        QubitId q{i};
        if (!g.touches(q) &&
            std::find(anc.begin(), anc.end(), q) == anc.end()) {
          anc.push_back(q);
        }
      }
    }
    if (anc.size() < need) {
      throw CircuitError("insufficient ancillas: C^" + std::to_string(x.size()) +
                         "X needs " + std::to_string(need) + ", have " +
                         std::to_string(anc.size()));
    }
    switch (strategy) {
      case McxStrategy::borrowed:
        detail::emit_borrowed(x, g.target(), anc, buf);
        break;
      case McxStrategy::single_clean:
        detail::emit_single_clean(x, g.target(), anc[0], buf);
        break;
      case McxStrategy::clean_ladder:
        detail::emit_clean_ladder(x, g.target(), anc, buf);
        break;
    }
    out.append(buf);
  }
  return out;
}

}  // namespace transposynth
