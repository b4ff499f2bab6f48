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
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "transposynth/bits.hpp"
#include "transposynth/pipeline.hpp"
#include "transposynth/simulator.hpp"
#include "transposynth/transposition.hpp"

namespace transposynth {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t stream_seed(std::uint64_t seed, unsigned n, unsigned hamming) {
  return splitmix64(splitmix64(splitmix64(seed) ^ n) ^ hamming);
}

// Uniform integer in [0, bound) by rejection; bound >= 1.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v;
  do v = rng(); while (v >= limit);
  return v % bound;
}

inline std::uint64_t uniform_bits(std::mt19937_64& rng, unsigned n) {
  return rng() & BitString::mask(n);
}

// 2^{n-1} C(n, d), or nullopt when it does not fit in 64 bits.
inline std::optional<std::uint64_t> pairs_at_distance(unsigned n, unsigned d) {
  std::vector<std::uint64_t> row{1};  // Pascal row; C(64, k) fits in 64 bits
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(i + 1, 1);
    for (unsigned k = 1; k < i; ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
  }
  const std::uint64_t binom = row[d];
  if (binom > (~std::uint64_t{0} >> (n - 1))) return std::nullopt;
  return binom << (n - 1);
}

// Next integer with the same popcount (Gosper).
inline std::uint64_t next_combination(std::uint64_t m) {
  const std::uint64_t low = m & (~m + 1);
  const std::uint64_t ripple = m + low;
  return ripple | (((m ^ ripple) >> 2) / low);
}

}  // namespace detail

inline constexpr std::string_view prng_description =
    "mt19937_64, per-(seed,n,hamming) stream seeded via splitmix64";

/**
 * Transposition pairs for one n. Without a distance, each pair is drawn
 * uniformly (a != b, pairs may repeat). With a distance d, the whole set of
 * 2^{n-1} C(n,d) unordered pairs is returned in lexicographic order when it
 * has at most `count` members; otherwise `count` distinct pairs are sampled.
 */
inline std::vector<TranspositionSpec> sample_transpositions(
    unsigned n, std::size_t count, std::optional<unsigned> hamming,
    std::uint64_t seed) {
  if (n == 0 || n > BitString::max_width) throw std::invalid_argument("n must be in 1..64");
  if (count == 0) throw std::invalid_argument("count must be positive");
  if (hamming && (*hamming == 0 || *hamming > n)) {
    throw std::invalid_argument("impossible Hamming distance " +
                                std::to_string(*hamming) + " for n=" + std::to_string(n));
  }
  std::mt19937_64 rng(detail::stream_seed(seed, n, hamming.value_or(0)));
  std::vector<TranspositionSpec> out;
  out.reserve(count);

  if (!hamming) {
    while (out.size() < count) {
      std::uint64_t a = detail::uniform_bits(rng, n), b;
      do b = detail::uniform_bits(rng, n); while (b == a);
      out.emplace_back(BitString(n, a), BitString(n, b));
    }
    return out;
  }

  const unsigned d = *hamming;
  auto total = detail::pairs_at_distance(n, d);
  if (total && *total <= count) {
    std::vector<std::uint64_t> masks;
    for (std::uint64_t m = BitString::mask(d);; m = detail::next_combination(m)) {
      masks.push_back(m);
      if (m == (BitString::mask(d) << (n - d))) break;
    }
    for (std::uint64_t a = 0; a <= BitString::mask(n); ++a) {
      for (std::uint64_t m : masks) {
        if (a < (a ^ m)) out.emplace_back(BitString(n, a), BitString(n, a ^ m));
      }
    }
    return out;
  }

  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  std::vector<unsigned> idx(n);
  while (out.size() < count) {
    std::uint64_t a = detail::uniform_bits(rng, n);
    for (unsigned i = 0; i < n; ++i) idx[i] = i;
    std::uint64_t m = 0;
    for (unsigned i = 0; i < d; ++i) {
      unsigned j = i + static_cast<unsigned>(detail::uniform_below(rng, n - i));
      std::swap(idx[i], idx[j]);
      m |= std::uint64_t{1} << idx[i];
    }
    std::uint64_t b = a ^ m;
    if (seen.emplace(std::min(a, b), std::max(a, b)).second) {
      out.emplace_back(BitString(n, a), BitString(n, b));
    }
  }
  return out;
}

struct TrialConfig {
  std::vector<unsigned> n_values;
  std::size_t trials = 200;
  std::optional<unsigned> hamming;
  std::uint64_t seed = 0;
  SynthesisStrategy strategy = SynthesisStrategy::thm3_b;
  Lowering lowering = Lowering::none;
  bool optimize = true;
  ProjectorOrder order = ProjectorOrder::mirrored;
  unsigned verify_max_n = 10;  // verify every trial up to this width
  unsigned threads = 0;        // 0: hardware concurrency
};

/** Toffoli cap for the flag construction: 0, 2, 6 for n <= 3, then linear. */
inline std::optional<double> toffoli_bound(SynthesisStrategy s, unsigned n) {
  if (s == SynthesisStrategy::gray_code) return std::nullopt;
  if (n <= 3) return std::vector<double>{0, 0, 2, 6}[n];
  return s == SynthesisStrategy::thm3_a ? 12.0 * n - 36 : 4.0 * n - 6;
}

struct StatsRow {
  unsigned n = 0;
  std::string strategy;
  std::size_t trials = 0;
  double avg_cnot = 0;
  std::size_t max_cnot = 0;
  double avg_toffoli = 0;
  std::size_t max_toffoli = 0;
  double avg_t = 0;
  double avg_x = 0;
  double avg_h = 0;
  double bound_cnot = 0;
  std::optional<double> bound_toffoli;
  std::optional<double> verified_fraction;
  std::uint64_t seed = 0;

  friend bool operator==(const StatsRow&, const StatsRow&) = default;
};

struct StatsTable {
  std::vector<StatsRow> rows;
  friend bool operator==(const StatsTable&, const StatsTable&) = default;
};

namespace detail {

struct TrialResult {
  GateCounts counts;
  bool verified = false;
};

inline TrialResult run_trial(const TranspositionSpec& spec, const TrialConfig& cfg) {
  Circuit c = compile_transposition(spec, {cfg.strategy, cfg.lowering, cfg.optimize, cfg.order});
  TrialResult r{count_gates(c), false};
  if (spec.n() <= cfg.verify_max_n) {
    QubitList anc;
    for (unsigned q = spec.n(); q < c.num_qubits(); ++q) anc.emplace_back(q);
    r.verified = verify_transposition(c, spec.a(), spec.b(), data_qubits(spec.n()), anc).passed();
  }
  return r;
}

}  // namespace detail

/**
 * Synthesizes every sampled transposition and aggregates gate counts per n.
 * Trials run on a thread pool; results are reduced in trial order, so the
 * table is identical for any thread count.
 */
inline StatsTable run_count_study(const TrialConfig& cfg) {
  if (cfg.n_values.empty()) throw std::invalid_argument("empty n range");
  if (cfg.trials == 0) throw std::invalid_argument("trials must be positive");
  StatsTable table;
  for (unsigned n : cfg.n_values) {
    const auto specs = sample_transpositions(n, cfg.trials, cfg.hamming, cfg.seed);
    std::vector<detail::TrialResult> results(specs.size());
    unsigned workers = cfg.threads ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, specs.size()));
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          for (std::size_t i = w; i < specs.size(); i += workers) {
            results[i] = detail::run_trial(specs[i], cfg);
          }
        });
      }
    }
    StatsRow row;
    row.n = n;
    row.strategy = std::string(strategy_name(cfg.strategy));
    row.trials = specs.size();
    row.seed = cfg.seed;
    std::uint64_t cnot = 0, tof = 0, t = 0, x = 0, h = 0, ok = 0;
    for (const auto& r : results) {
      cnot += r.counts.cnot;
      tof += r.counts.toffoli;
      t += r.counts.t_type;
      x += r.counts.x;
      h += r.counts.h;
      ok += r.verified;
      row.max_cnot = std::max(row.max_cnot, r.counts.cnot);
      row.max_toffoli = std::max(row.max_toffoli, r.counts.toffoli);
    }
    const double k = static_cast<double>(specs.size());
    row.avg_cnot = static_cast<double>(cnot) / k;
    row.avg_toffoli = static_cast<double>(tof) / k;
    row.avg_t = static_cast<double>(t) / k;
    row.avg_x = static_cast<double>(x) / k;
    row.avg_h = static_cast<double>(h) / k;
    row.bound_cnot = 2.0 * n;
    row.bound_toffoli = toffoli_bound(cfg.strategy, n);
    if (n <= cfg.verify_max_n) row.verified_fraction = static_cast<double>(ok) / k;
    table.rows.push_back(std::move(row));
  }
  return table;
}

struct LowerBoundParams {
  unsigned n = 0;            // qubits
  unsigned d = 0;            // gate-set size
  unsigned c = 0;            // largest gate arity
  double family_size = 0;    // |U|
};

enum class BoundMode { worst_case, average };

/**
 * Gate-count lower bound for a family U of operators over a finite gate set
 * with d gates of arity at most c (log base 2):
 *   worst case  log|U| / log(n!/(n-c)! * d)
 *   average     0.5 log(|U|/2) / log(n!/(n-c)! * d)
 */
inline double lower_bound(const LowerBoundParams& p, BoundMode mode) {
  if (p.n == 0 || p.d == 0 || p.c == 0) throw std::invalid_argument("n, d, c must be positive");
  if (p.c > p.n) throw std::invalid_argument("gate arity c exceeds n");
  const double min_family = mode == BoundMode::average ? 2.0 : 1.0;
  if (!(p.family_size >= min_family)) {
    throw std::invalid_argument("family size below the mode minimum");
  }
  double denom = std::log2(static_cast<double>(p.d));
  for (unsigned i = 0; i < p.c; ++i) denom += std::log2(static_cast<double>(p.n - i));
  if (denom <= 0) throw std::invalid_argument("a single placement cannot bound anything");
  const double numer = mode == BoundMode::worst_case
                           ? std::log2(p.family_size)
                           : 0.5 * std::log2(p.family_size / 2.0);
  return numer / denom;
}

enum class StatsFormat { csv, markdown };

namespace detail {

inline std::string fmt_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

inline std::string fmt_opt(const std::optional<double>& v) {
  return v ? fmt_double(*v) : std::string();
}

inline std::string fmt_fixed(double v, int digits) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, digits);
  return std::string(buf, end);
}

}  // namespace detail

inline constexpr std::string_view stats_csv_header =
    "n,strategy,trials,avg_cnot,max_cnot,avg_toffoli,max_toffoli,avg_t,avg_x,"
    "avg_h,bound_cnot,bound_toffoli,verified_fraction,seed";

inline std::string export_stats(const StatsTable& table, StatsFormat format) {
  if (table.rows.empty()) throw std::invalid_argument("empty statistics table");
  std::ostringstream os;
  if (format == StatsFormat::csv) {
    os << "# prng: " << prng_description << "\n# log_base: 2\n" << stats_csv_header << '\n';
    for (const auto& r : table.rows) {
      using detail::fmt_double;
      os << r.n << ',' << r.strategy << ',' << r.trials << ',' << fmt_double(r.avg_cnot)
         << ',' << r.max_cnot << ',' << fmt_double(r.avg_toffoli) << ',' << r.max_toffoli
         << ',' << fmt_double(r.avg_t) << ',' << fmt_double(r.avg_x) << ','
         << fmt_double(r.avg_h) << ',' << fmt_double(r.bound_cnot) << ','
         << detail::fmt_opt(r.bound_toffoli) << ',' << detail::fmt_opt(r.verified_fraction)
         << ',' << r.seed << '\n';
    }
    return os.str();
  }
  os << "| n | Avg CNOT | Bd CNOT | Avg Toffoli | Bd Toffoli | Avg T | Verified |\n"
     << "|---|---|---|---|---|---|---|\n";
  for (const auto& r : table.rows) {
    os << "| " << r.n << " | " << detail::fmt_fixed(r.avg_cnot, 2) << " | "
       << detail::fmt_fixed(r.bound_cnot, 0) << " | " << detail::fmt_fixed(r.avg_toffoli, 2)
       << " | " << (r.bound_toffoli ? detail::fmt_fixed(*r.bound_toffoli, 0) : "-") << " | "
       << detail::fmt_fixed(r.avg_t, 2) << " | "
       << (r.verified_fraction ? detail::fmt_fixed(*r.verified_fraction, 3) : "-") << " |\n";
  }
  return os.str();
}

/** Reads the CSV written by export_stats; `#` lines are skipped. */
inline StatsTable parse_stats_csv(std::string_view text) {
  StatsTable table;
  bool header = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (!header) {
      if (line != stats_csv_header) throw std::runtime_error("unexpected CSV header");
      header = true;
      continue;
    }
    std::vector<std::string_view> f;
    for (std::size_t start = 0;;) {
      auto comma = line.find(',', start);
      f.push_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (f.size() != 14) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected 14 fields");
    }
    auto num = [&](std::string_view s, auto& out) {
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
      if (ec != std::errc{} || p != s.data() + s.size()) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": bad number '" +
                                 std::string(s) + "'");
      }
    };
    auto opt = [&](std::string_view s) -> std::optional<double> {
      if (s.empty()) return std::nullopt;
      double v;
      num(s, v);
      return v;
    };
    StatsRow r;
    num(f[0], r.n);
    r.strategy = std::string(f[1]);
    num(f[2], r.trials);
    num(f[3], r.avg_cnot);
    num(f[4], r.max_cnot);
    num(f[5], r.avg_toffoli);
    num(f[6], r.max_toffoli);
    num(f[7], r.avg_t);
    num(f[8], r.avg_x);
    num(f[9], r.avg_h);
    num(f[10], r.bound_cnot);
    r.bound_toffoli = opt(f[11]);
    r.verified_fraction = opt(f[12]);
    num(f[13], r.seed);
    table.rows.push_back(std::move(r));
  }
  if (!header) throw std::runtime_error("missing CSV header");
  return table;
}

inline std::string study_file_name(SynthesisStrategy s, std::uint64_t seed) {
  return "study_" + std::string(strategy_name(s)) + "_" + std::to_string(seed) + ".csv";
}

}  // namespace transposynth
