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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "transposynth/bits.hpp"
#include "transposynth/circuit.hpp"
#include "transposynth/mcx.hpp"

namespace transposynth {

/** The pair (a, b) of equal-width bit strings whose basis states are swapped. */
class TranspositionSpec {
 public:
  TranspositionSpec(BitString a, BitString b) : a_(a), b_(b) {
    if (a.width() != b.width()) {
      throw CircuitError("bit-length mismatch: " + std::to_string(a.width()) +
                         " vs " + std::to_string(b.width()));
    }
    if (a.width() == 0) throw CircuitError("transposition needs at least one bit");
    if (a == b) throw CircuitError("a and b must differ");
  }

  static TranspositionSpec parse(std::string_view a, std::string_view b) {
    return {BitString::parse(a), BitString::parse(b)};
  }

  unsigned n() const { return a_.width(); }
  BitString a() const { return a_; }
  BitString b() const { return b_; }
  TranspositionSpec swapped() const { return {b_, a_}; }

 private:
  BitString a_;
  BitString b_;
};

enum class SynthesisStrategy { thm3_a, thm3_b, gray_code };

inline std::string_view strategy_name(SynthesisStrategy s) {
  switch (s) {
    case SynthesisStrategy::thm3_a:
      return "thm3_a";
    case SynthesisStrategy::thm3_b:
      return "thm3_b";
    case SynthesisStrategy::gray_code:
      return "gray";
  }
  return "?";
}

inline SynthesisStrategy strategy_from_name(std::string_view name) {
  if (name == "thm3_a") return SynthesisStrategy::thm3_a;
  if (name == "thm3_b") return SynthesisStrategy::thm3_b;
  if (name == "gray" || name == "gray_code") return SynthesisStrategy::gray_code;
  throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

/**
 * Control order of the second projector's MCX. `mirrored` lists the data
 * qubits in descending order, so the two lowered MCX blocks do not share a
 * Toffoli boundary and keep their full Toffoli count. `shared` reuses the
 * ascending order, which lets the peephole pass cancel Toffolis across the
 * two blocks when the leading bits of a and b agree.
 */
enum class ProjectorOrder { mirrored, shared };

/** One CNOT(flag -> data[i]) for every bit where a and b differ, ascending. */
inline Circuit controlled_u_ab(const TranspositionSpec& spec, QubitId flag,
                               const QubitList& data) {
  if (data.size() != spec.n()) throw CircuitError("data register width mismatch");
  if (std::find(data.begin(), data.end(), flag) != data.end()) {
    throw CircuitError("flag qubit collides with data");
  }
  unsigned top = flag.index;
  for (QubitId q : data) top = std::max(top, q.index);
  Circuit c(top + 1);
  for (unsigned i = 0; i < spec.n(); ++i) {
    if (spec.a()[i] != spec.b()[i]) c.append(Gate::cnot(flag.index, data[i].index));
  }
  return c;
}

/**
 * X on `target` iff the controls read exactly `pattern`: an MCX sandwiched
 * between X gates on the controls whose pattern bit is 0.
 */
inline Circuit projector_controlled_x(BitString pattern, const QubitList& controls,
                                      QubitId target) {
  if (controls.size() != pattern.width()) {
    throw CircuitError("pattern width does not match control count");
  }
  unsigned top = target.index;
  for (QubitId q : controls) top = std::max(top, q.index);
  Circuit c(top + 1);
  auto flips = [&] {
    for (unsigned i = 0; i < pattern.width(); ++i) {
      if (!pattern[i]) c.append(Gate::x(controls[i].index));
    }
  };
  flips();
  c.append(Gate::mcx(controls, target));
  flips();
  return c;
}

/** Extra clean ancillas the strategy's MCX lowering needs beyond the flag. */
inline unsigned lowering_ancillas(SynthesisStrategy strategy, unsigned n) {
  if (n < 3) return 0;
  switch (strategy) {
    case SynthesisStrategy::thm3_a:
      return 1;
    case SynthesisStrategy::thm3_b:
      return n - 2;
    case SynthesisStrategy::gray_code:
      return 0;
  }
  return 0;
}

inline McxStrategy mcx_strategy_for(SynthesisStrategy strategy) {
  switch (strategy) {
    case SynthesisStrategy::thm3_a:
      return McxStrategy::single_clean;
    case SynthesisStrategy::thm3_b:
      return McxStrategy::clean_ladder;
    case SynthesisStrategy::gray_code:
      return McxStrategy::borrowed;
  }
  return McxStrategy::borrowed;
}

inline QubitList data_qubits(unsigned n) {
  QubitList out;
  for (unsigned i = 0; i < n; ++i) out.emplace_back(i);
  return out;
}

/**
 * The MCX-level transposition circuit on [data 0..n-1, flag n, lowering
 * ancillas n+1 ...]. All ancillas are clean.
 *
 *   H(flag) U Pi_a Pi_b U H(flag)
 */
inline Circuit build_transposition_mcx(const TranspositionSpec& spec,
                                       SynthesisStrategy strategy,
                                       ProjectorOrder order = ProjectorOrder::mirrored) {
  if (strategy == SynthesisStrategy::gray_code) {
    throw CircuitError("the Gray-code baseline has no flag-based MCX form");
  }
  const unsigned n = spec.n();
  const QubitId flag{n};
  Circuit c(n + 1 + lowering_ancillas(strategy, n));
  for (unsigned q = n; q < c.num_qubits(); ++q) {
    c.set_role(QubitId{q}, QubitRole::clean_ancilla);
  }
  const QubitList data = data_qubits(n);
  const Circuit u = controlled_u_ab(spec, flag, data);

  QubitList b_controls = data;
  BitString b_pattern = spec.b();
  if (order == ProjectorOrder::mirrored) {
    std::reverse(b_controls.begin(), b_controls.end());
    for (unsigned i = 0; i < n; ++i) b_pattern = b_pattern.with(i, spec.b()[n - 1 - i]);
  }

  c.append(Gate::h(flag.index));
  c.append(u.gates());
  c.append(projector_controlled_x(spec.a(), data, flag).gates());
  c.append(projector_controlled_x(b_pattern, b_controls, flag).gates());
  c.append(u.gates());
  c.append(Gate::h(flag.index));
  return c;
}

/**
 * Ancilla-free baseline over {X, CNOT, MCX}. Walks a = g_0, ..., g_m = b,
 * flipping the differing bits in ascending order; each step swaps two
 * neighbouring basis states with an (n-1)-controlled X, and the final step is
 * conjugated by the others: S_1 .. S_{m-1} S_m S_{m-1} .. S_1.
 */
inline Circuit synthesize_gray_code(const TranspositionSpec& spec) {
  const unsigned n = spec.n();
  Circuit c(n);
  std::vector<unsigned> diff;
  for (unsigned i = 0; i < n; ++i) {
    if (spec.a()[i] != spec.b()[i]) diff.push_back(i);
  }
  std::vector<std::vector<Gate>> steps;
  BitString g = spec.a();
  for (unsigned j : diff) {
    std::vector<Gate> step;
    if (n == 1) {
      step.push_back(Gate::x(j));
    } else {
      QubitList controls;
      BitString pattern(n - 1, 0);
      for (unsigned i = 0, k = 0; i < n; ++i) {
        if (i == j) continue;
        controls.emplace_back(i);
        pattern = pattern.with(k++, g[i]);
      }
      Circuit s = projector_controlled_x(pattern, controls, QubitId{j});
      step.assign(s.gates().begin(), s.gates().end());
    }
    steps.push_back(std::move(step));
    g = g.with(j, !g[j]);
  }
  for (const auto& s : steps) c.append(s);
  for (auto it = steps.rbegin() + 1; it != steps.rend(); ++it) c.append(*it);
  return c;
}

/**
 * Lowers the Gray-code baseline to Toffolis, appending the n - 3 borrowed
 * qubits its (n-1)-controlled gates need.
 */
inline Circuit lower_gray_code(const Circuit& mcx_level) {
  Circuit c = mcx_level;
  const unsigned n = c.num_qubits();
  QubitList pool;
  if (n > 3) {
    for (unsigned q = n; q < 2 * n - 3; ++q) pool.emplace_back(q);
    c.add_qubits(n - 3, QubitRole::borrowed_ancilla);
  }
  return lower_mcx(c, McxStrategy::borrowed, pool);
}

/**
 * Toffoli-level transposition circuit. For thm3_a and thm3_b this is the
 * flag construction with its MCX gates lowered by the single-clean or
 * clean-ladder decomposition; gray_code lowers the baseline with borrowed
 * ancillas.
 */
inline Circuit synthesize_transposition(const TranspositionSpec& spec,
                                        SynthesisStrategy strategy,
                                        ProjectorOrder order = ProjectorOrder::mirrored) {
  if (strategy == SynthesisStrategy::gray_code) {
    return lower_gray_code(synthesize_gray_code(spec));
  }
  Circuit c = build_transposition_mcx(spec, strategy, order);
  QubitList pool;
  for (unsigned q = spec.n() + 1; q < c.num_qubits(); ++q) pool.emplace_back(q);
  return lower_mcx(c, mcx_strategy_for(strategy), pool);
}

}  // namespace transposynth
