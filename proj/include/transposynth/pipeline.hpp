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

#include <stdexcept>
#include <string>
#include <string_view>

#include "transposynth/circuit.hpp"
#include "transposynth/clifford_t.hpp"
#include "transposynth/peephole.hpp"
#include "transposynth/transposition.hpp"

namespace transposynth {

/** Final gate set: Toffoli level, or Clifford+T with either pairing. */
enum class Lowering { none, naive, inverse_aware };

inline std::string_view lowering_name(Lowering l) {
  switch (l) {
    case Lowering::none:
      return "none";
    case Lowering::naive:
      return "naive";
    case Lowering::inverse_aware:
      return "inverse_aware";
  }
  return "?";
}

inline Lowering lowering_from_name(std::string_view name) {
  if (name == "none") return Lowering::none;
  if (name == "naive") return Lowering::naive;
  if (name == "inverse_aware") return Lowering::inverse_aware;
  throw std::invalid_argument("unknown lowering '" + std::string(name) + "'");
}

struct CompileOptions {
  SynthesisStrategy strategy = SynthesisStrategy::thm3_b;
  Lowering lowering = Lowering::none;
  bool optimize = true;
  ProjectorOrder order = ProjectorOrder::mirrored;
};

/**
 * MCX-level synthesis, MCX lowering, then optional Clifford+T expansion, with
 * remove_redundancies after each stage when `optimize` is set.
 */
inline Circuit compile_transposition(const TranspositionSpec& spec,
                                     const CompileOptions& opt = {}) {
  auto tidy = [&](Circuit c) { return opt.optimize ? remove_redundancies(c) : c; };
  Circuit c(1);
  if (opt.strategy == SynthesisStrategy::gray_code) {
    c = tidy(lower_gray_code(tidy(synthesize_gray_code(spec))));
  } else {
    Circuit mcx_level = tidy(build_transposition_mcx(spec, opt.strategy, opt.order));
    QubitList pool;
    for (unsigned q = spec.n() + 1; q < mcx_level.num_qubits(); ++q) pool.emplace_back(q);
    c = tidy(lower_mcx(mcx_level, mcx_strategy_for(opt.strategy), pool));
  }
  if (opt.lowering != Lowering::none) {
    c = tidy(lower_all_toffolis(c, opt.lowering == Lowering::naive
                                       ? ToffoliPairing::naive
                                       : ToffoliPairing::inverse_aware));
  }
  return c;
}

}  // namespace transposynth
