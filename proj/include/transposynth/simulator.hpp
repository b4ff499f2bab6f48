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
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "transposynth/bits.hpp"
#include "transposynth/circuit.hpp"
#include "transposynth/mcx.hpp"

namespace transposynth {

class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Amplitude = std::complex<double>;

inline constexpr unsigned default_dense_cap = 20;

/**
 * Dense-simulation qubit cap: TRANSPOSYNTH_SIM_CAP if set to a positive
 * integer, otherwise 20.
 */
inline unsigned sim_cap_from_env() {
  if (const char* v = std::getenv("TRANSPOSYNTH_SIM_CAP")) {
    char* end = nullptr;
    unsigned long cap = std::strtoul(v, &end, 10);
    if (end != v && *end == '\0' && cap > 0 && cap <= 64) {
      return static_cast<unsigned>(cap);
    }
  }
  return default_dense_cap;
}

namespace detail {

inline std::uint64_t bit(QubitId q) { return std::uint64_t{1} << q.index; }

inline std::uint64_t control_mask(const Gate& g) {
  std::uint64_t m = 0;
  for (QubitId c : g.controls()) m |= bit(c);
  return m;
}

inline std::uint64_t apply_permutation(const Gate& g, std::uint64_t state) {
  const std::uint64_t m = control_mask(g);
  if ((state & m) == m) state ^= bit(g.target());
  return state;
}

inline Amplitude phase_of(GateKind kind) {
  const double r = std::sqrt(0.5);
  switch (kind) {
    case GateKind::T:
      return {r, r};
    case GateKind::Tdg:
      return {r, -r};
    case GateKind::S:
      return {0.0, 1.0};
    case GateKind::Sdg:
      return {0.0, -1.0};
    default:
      return {1.0, 0.0};
  }
}

inline void check_width(const Circuit& c, const BasisState& input) {
  if (input.width() != c.num_qubits()) {
    throw SimulationError("input has " + std::to_string(input.width()) +
                          " bits for a " + std::to_string(c.num_qubits()) +
                          "-qubit circuit");
  }
}

}  // namespace detail

/** Classical simulation of a permutation-only circuit on one basis state. */
inline BasisState run_reversible(const Circuit& circuit, const BasisState& input) {
  detail::check_width(circuit, input);
  std::uint64_t s = input.bits();
  for (const Gate& g : circuit.gates()) {
    if (!is_permutation_kind(g.kind())) {
      throw SimulationError("run_reversible: non-permutation gate " +
                            std::string(kind_name(g.kind())));
    }
    s = detail::apply_permutation(g, s);
  }
  return BasisState(input.width(), s);
}

/** Dense 2^n amplitude vector. Qubit i is bit i of the basis index. */
class StateVector {
 public:
  StateVector(unsigned num_qubits, std::uint64_t basis)
      : num_qubits_(num_qubits), amps_(std::size_t{1} << num_qubits) {
    amps_.at(basis) = 1.0;
  }

  unsigned num_qubits() const { return num_qubits_; }
  const std::vector<Amplitude>& amplitudes() const { return amps_; }
  Amplitude operator[](std::uint64_t basis) const { return amps_.at(basis); }

  void apply(const Gate& g) {
    const std::uint64_t t = detail::bit(g.target());
    const std::size_t dim = amps_.size();
    switch (g.kind()) {
      case GateKind::H: {
        const double r = std::sqrt(0.5);
        for (std::size_t i = 0; i < dim; ++i) {
          if (i & t) continue;
          Amplitude a0 = amps_[i], a1 = amps_[i | t];
          amps_[i] = r * (a0 + a1);
          amps_[i | t] = r * (a0 - a1);
        }
        break;
      }
      case GateKind::T:
      case GateKind::Tdg:
      case GateKind::S:
      case GateKind::Sdg: {
        const Amplitude p = detail::phase_of(g.kind());
        for (std::size_t i = 0; i < dim; ++i) {
          if (i & t) amps_[i] *= p;
        }
        break;
      }
      default: {
        const std::uint64_t m = detail::control_mask(g);
        for (std::size_t i = 0; i < dim; ++i) {
          if ((i & t) == 0 && (i & m) == m) std::swap(amps_[i], amps_[i | t]);
        }
      }
    }
  }

  double norm_squared() const {
    double s = 0;
    for (const Amplitude& a : amps_) s += std::norm(a);
    return s;
  }

 private:
  unsigned num_qubits_;
  std::vector<Amplitude> amps_;
};

/** Dense simulation; registers wider than `cap` qubits are rejected. */
inline StateVector run_statevector(const Circuit& circuit,
                                   const BasisState& input,
                                   unsigned cap = default_dense_cap) {
  detail::check_width(circuit, input);
  if (circuit.num_qubits() > cap) {
    throw SimulationError("register exceeds dense-simulation cap (" +
                          std::to_string(circuit.num_qubits()) + " > " +
                          std::to_string(cap) + ")");
  }
  StateVector sv(circuit.num_qubits(), input.bits());
  for (const Gate& g : circuit.gates()) sv.apply(g);
  return sv;
}

/**
 * Sparse state: the nonzero amplitudes only, sorted by basis index. Circuits
 * built from permutations with a few interleaved H gates keep this tiny.
 */
class SparseState {
 public:
  using Term = std::pair<std::uint64_t, Amplitude>;

  explicit SparseState(std::uint64_t basis) : terms_{{basis, 1.0}} {}

  const std::vector<Term>& terms() const { return terms_; }

  void apply(const Gate& g) {
    const std::uint64_t t = detail::bit(g.target());
    switch (g.kind()) {
      case GateKind::H: {
        const double r = std::sqrt(0.5);
        std::vector<Term> next;
        next.reserve(terms_.size() * 2);
        for (auto [idx, a] : terms_) {
          next.emplace_back(idx & ~t, r * a);
          next.emplace_back(idx | t, (idx & t) ? -r * a : r * a);
        }
        terms_ = merge(std::move(next));
        break;
      }
      case GateKind::T:
      case GateKind::Tdg:
      case GateKind::S:
      case GateKind::Sdg: {
        const Amplitude p = detail::phase_of(g.kind());
        for (auto& [idx, a] : terms_) {
          if (idx & t) a *= p;
        }
        break;
      }
      default:
        for (auto& term : terms_) term.first = detail::apply_permutation(g, term.first);
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& l, const Term& r) { return l.first < r.first; });
    }
  }

 private:
  static constexpr double prune = 1e-14;

  static std::vector<Term> merge(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& l, const Term& r) { return l.first < r.first; });
    std::vector<Term> out;
    for (const Term& term : terms) {
      if (!out.empty() && out.back().first == term.first) {
        out.back().second += term.second;
      } else {
        out.push_back(term);
      }
    }
    std::erase_if(out, [](const Term& term) { return std::abs(term.second) < prune; });
    return out;
  }

  std::vector<Term> terms_;
};

inline SparseState run_sparse(const Circuit& circuit, const BasisState& input) {
  detail::check_width(circuit, input);
  SparseState s(input.bits());
  for (const Gate& g : circuit.gates()) s.apply(g);
  return s;
}

inline bool is_permutation_circuit(const Circuit& circuit) {
  return std::all_of(circuit.gates().begin(), circuit.gates().end(),
                     [](const Gate& g) { return is_permutation_kind(g.kind()); });
}

/** One checked input of a verification sweep. */
struct VerificationRecord {
  BasisState state;
  BasisState expected;
  BasisState actual;  // dominant basis component of the output
  double amplitude = 0;  // |<expected|output>|
  bool pass = false;
};

struct VerificationReport {
  std::string kind;
  std::size_t checked = 0;
  std::size_t failed = 0;
  bool sampled = false;
  std::vector<VerificationRecord> records;

  bool passed() const { return checked > 0 && failed == 0; }

  const VerificationRecord* first_failure() const {
    for (const auto& r : records) {
      if (!r.pass) return &r;
    }
    return nullptr;
  }
};

struct VerifyOptions {
  // Inputs are enumerated exhaustively up to 2^exhaustive_bits of them.
  unsigned exhaustive_bits = default_dense_cap;
  std::size_t samples = 4096;
  std::uint64_t seed = 0x5eed;
  double tolerance = 1e-9;
};

namespace detail {

// Runs one input and compares against the expected basis state. `phase`
// pins the common global phase across a sweep.
inline VerificationRecord check_input(const Circuit& c, std::uint64_t in,
                                      std::uint64_t expected,
                                      std::optional<Amplitude>& phase,
                                      double tol) {
  const unsigned n = c.num_qubits();
  VerificationRecord rec{BasisState(n, in), BasisState(n, expected),
                         BasisState(n, 0), 0.0, false};
  if (is_permutation_circuit(c)) {
    std::uint64_t s = in;
    for (const Gate& g : c.gates()) s = apply_permutation(g, s);
    rec.actual = BasisState(n, s);
    rec.amplitude = s == expected ? 1.0 : 0.0;
    rec.pass = s == expected;
    return rec;
  }
  SparseState st(in);
  for (const Gate& g : c.gates()) st.apply(g);
  double best = -1, stray = 0;
  Amplitude at_expected = 0;
  for (auto [idx, a] : st.terms()) {
    double mag = std::abs(a);
    if (mag > best) {
      best = mag;
      rec.actual = BasisState(n, idx);
    }
    if (idx == expected) {
      at_expected = a;
    } else {
      stray = std::max(stray, mag);
    }
  }
  rec.amplitude = std::abs(at_expected);
  bool ok = std::abs(rec.amplitude - 1.0) < tol && stray < tol;
  if (ok) {
    if (!phase) phase = at_expected;
    ok = std::abs(at_expected - *phase) < tol;
  }
  rec.pass = ok;
  return rec;
}

// Sweeps `free_bits` input bits (exhaustively or by seeded sampling). The
// callback turns a free-bit assignment into (input, expected) words.
template <class Expand>
VerificationReport sweep(const Circuit& c, std::string kind, unsigned free_bits,
                         const VerifyOptions& opt, Expand expand) {
  VerificationReport rep;
  rep.kind = std::move(kind);
  std::optional<Amplitude> phase;
  auto run = [&](std::uint64_t assignment) {
    auto [in, expected] = expand(assignment);
    auto rec = check_input(c, in, expected, phase, opt.tolerance);
    ++rep.checked;
    if (!rec.pass) ++rep.failed;
    rep.records.push_back(rec);
  };
  if (free_bits <= opt.exhaustive_bits) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << free_bits); ++v) run(v);
  } else {
    rep.sampled = true;
    std::mt19937_64 rng(opt.seed);
    for (std::size_t i = 0; i < opt.samples; ++i) {
      run(rng() & BitString::mask(free_bits));
    }
  }
  return rep;
}

}  // namespace detail

/**
 * Checks the transposition |a> <-> |b> on the data qubits for every data
 * basis state, with all other qubits (the ancillas) starting and ending in 0.
 */
inline VerificationReport verify_transposition(const Circuit& circuit,
                                               BitString a, BitString b,
                                               const QubitList& data,
                                               const QubitList& ancillas,
                                               const VerifyOptions& opt = {}) {
  const unsigned n = a.width();
  if (b.width() != n || data.size() != n) {
    throw SimulationError("transposition width does not match data qubits");
  }
  for (QubitId q : data) {
    if (q.index >= circuit.num_qubits()) throw SimulationError("data qubit out of range");
  }
  for (QubitId q : ancillas) {
    if (q.index >= circuit.num_qubits()) throw SimulationError("ancilla out of range");
  }
  if (circuit.num_qubits() > BitString::max_width) {
    throw SimulationError("register wider than 64 qubits");
  }
  auto scatter = [&](std::uint64_t word) {
    std::uint64_t s = 0;
    for (unsigned i = 0; i < n; ++i) {
      if ((word >> i) & 1U) s |= detail::bit(data[i]);
    }
    return s;
  };
  return detail::sweep(circuit, "transposition", n, opt, [&](std::uint64_t x) {
    std::uint64_t image = x == a.bits() ? b.bits() : x == b.bits() ? a.bits() : x;
    return std::pair{scatter(x), scatter(image)};
  });
}

/**
 * Checks target ^= AND(controls) with every other layout qubit restored.
 * Borrowed ancillas are swept over all values, clean ones held at 0.
 */
inline VerificationReport verify_mcx(const Circuit& circuit,
                                     const McxLayout& layout,
                                     const VerifyOptions& opt = {}) {
  if (!is_permutation_circuit(circuit)) {
    throw SimulationError("verify_mcx expects a permutation-only circuit");
  }
  QubitList swept = layout.controls;
  swept.push_back(layout.target);
  if (layout.ancilla_kind == AncillaKind::borrowed) swept.insert(swept.end(), layout.ancillas.begin(), layout.ancillas.end());
  for (QubitId q : swept) {
    if (q.index >= circuit.num_qubits()) throw SimulationError("layout qubit out of range");
  }
  std::uint64_t cmask = 0;
  for (QubitId q : layout.controls) cmask |= detail::bit(q);
  const std::uint64_t tbit = detail::bit(layout.target);
  return detail::sweep(
      circuit, "mcx", static_cast<unsigned>(swept.size()), opt,
      [&](std::uint64_t v) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < swept.size(); ++i) {
          if ((v >> i) & 1U) s |= detail::bit(swept[i]);
        }
        std::uint64_t expected = (s & cmask) == cmask ? s ^ tbit : s;
        return std::pair{s, expected};
      });
}

/** One line per checked input, then a summary line. */
inline std::string report_to_text(const VerificationReport& rep) {
  std::string out;
  for (const auto& r : rep.records) {
    out += (r.pass ? "ok   " : "FAIL ") + r.state.to_string() + " -> " +
           r.actual.to_string() + " expected " + r.expected.to_string() + "\n";
  }
  out += rep.kind + ": " + std::to_string(rep.checked - rep.failed) + "/" +
         std::to_string(rep.checked) + " passed" + (rep.sampled ? " (sampled)" : "") + "\n";
  return out;
}

}  // namespace transposynth
