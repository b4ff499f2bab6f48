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


// transposynth: synthesize, verify and benchmark basis-state transpositions.

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "transposynth/report_json.hpp"
#include "transposynth/transposynth.hpp"

namespace ts = transposynth;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string summary(const ts::Circuit& c) {
  const ts::GateCounts g = ts::count_gates(c);
  std::ostringstream os;
  os << "qubits=" << c.num_qubits() << " h=" << g.h << " x=" << g.x << " cnot=" << g.cnot
     << " toffoli=" << g.toffoli << " mcx=" << g.mcx << " t=" << g.t_type
     << " s=" << g.s_type << " total=" << g.total;
  return os.str();
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << body)) throw std::runtime_error("cannot write " + path);
}

// "lo..hi" or a single integer.
std::vector<unsigned> parse_range(const std::string& text) {
  auto num = [&](std::string_view s) {
    unsigned v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) {
      throw UsageError("invalid range '" + text + "'");
    }
    return v;
  };
  const auto dots = text.find("..");
  unsigned lo = num(dots == std::string::npos ? text : text.substr(0, dots));
  unsigned hi = dots == std::string::npos ? lo : num(std::string_view(text).substr(dots + 2));
  if (lo == 0 || hi < lo || hi > 64) throw UsageError("invalid range '" + text + "'");
  std::vector<unsigned> out;
  for (unsigned n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

struct SynthArgs {
  std::string a, b, strategy = "thm3_b", lower = "none", out, format = "text";
  bool optimize = false;
};

int cmd_synth(const SynthArgs& args) {
  ts::TranspositionSpec spec = [&] {
    try {
      return ts::TranspositionSpec::parse(args.a, args.b);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }();
  ts::CompileOptions opt{ts::strategy_from_name(args.strategy),
                         ts::lowering_from_name(args.lower), args.optimize};
  const ts::Circuit c = ts::compile_transposition(spec, opt);
  const auto format = args.format == "qasm2" ? ts::CircuitFormat::qasm2 : ts::CircuitFormat::text;
  const std::string body = ts::serialize(c, format);
  if (args.out.empty()) {
    std::cout << body;
    std::cerr << summary(c) << '\n';
  } else {
    write_file(args.out, body);
    std::cout << summary(c) << '\n';
  }
  return kOk;
}

struct VerifyArgs {
  std::string circuit, a, b, mcx;
  bool json = false;
};

ts::Circuit load_circuit(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return ts::parse_circuit(buf.str());
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// Data qubits are the controls followed by the target; every other qubit is
// an ancilla whose kind comes from its role.
ts::McxLayout mcx_layout_from_roles(const ts::Circuit& c, unsigned k) {
  const ts::QubitList data = c.qubits_with_role(ts::QubitRole::data);
  if (data.size() != k + 1) {
    throw UsageError("--mcx n=" + std::to_string(k) + " needs " + std::to_string(k + 1) +
                     " data qubits, circuit has " + std::to_string(data.size()));
  }
  ts::McxLayout layout;
  layout.controls.assign(data.begin(), data.end() - 1);
  layout.target = data.back();
  layout.ancillas = c.qubits_with_role(ts::QubitRole::borrowed_ancilla);
  layout.ancilla_kind = ts::AncillaKind::borrowed;
  const ts::QubitList clean = c.qubits_with_role(ts::QubitRole::clean_ancilla);
  if (!clean.empty()) {
    if (!layout.ancillas.empty()) throw UsageError("mixed clean and borrowed ancillas");
    layout.ancillas = clean;
    layout.ancilla_kind = ts::AncillaKind::clean;
  }
  return layout;
}

int cmd_verify(const VerifyArgs& args) {
  const ts::Circuit c = load_circuit(args.circuit);
  const unsigned cap = ts::sim_cap_from_env();
  if (c.num_qubits() > cap) {
    throw UsageError("register exceeds dense-simulation cap (" +
                     std::to_string(c.num_qubits()) + " > " + std::to_string(cap) + ")");
  }
  ts::VerifyOptions vopt;
  vopt.exhaustive_bits = cap;
  ts::VerificationReport rep;
  if (!args.mcx.empty()) {
    if (args.mcx.rfind("n=", 0) != 0) throw UsageError("--mcx expects n=<k>");
    const auto k = parse_range(args.mcx.substr(2));
    rep = ts::verify_mcx(c, mcx_layout_from_roles(c, k.front()), vopt);
  } else {
    if (args.a.empty() || args.b.empty()) throw UsageError("verify needs --a and --b, or --mcx");
    ts::BitString a, b;
    try {
      a = ts::BitString::parse(args.a);
      b = ts::BitString::parse(args.b);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    if (a.width() != b.width()) throw UsageError("bit-length mismatch");
    const ts::QubitList data = c.qubits_with_role(ts::QubitRole::data);
    if (data.size() != a.width()) {
      throw UsageError("circuit has " + std::to_string(data.size()) + " data qubits, spec has " +
                       std::to_string(a.width()));
    }
    ts::QubitList ancillas;
    for (unsigned q = 0; q < c.num_qubits(); ++q) {
      if (c.role(ts::QubitId{q}) != ts::QubitRole::data) ancillas.emplace_back(q);
    }
    rep = ts::verify_transposition(c, a, b, data, ancillas, vopt);
  }
  if (args.json) std::cout << ts::report_to_json(rep).dump(2) << '\n';
  if (rep.passed()) {
    if (!args.json) {
      std::cout << "PASS (" << rep.checked << (rep.sampled ? " sampled" : "") << " states)\n";
    }
    return kOk;
  }
  const ts::VerificationRecord* f = rep.first_failure();
  std::cerr << "FAIL x=" << f->state.to_string() << " expected=" << f->expected.to_string()
            << " actual=" << f->actual.to_string() << " (" << rep.failed << " of "
            << rep.checked << " states failed)\n";
  return kVerifyFailed;
}

struct StudyArgs {
  std::string n = "2..20", strategy = "thm3_b", lower = "none", out;
  std::optional<std::size_t> trials;
  std::optional<unsigned> hamming;
  std::uint64_t seed = 0;
  bool no_optimize = false;
  unsigned threads = 0;
};

int cmd_study(const StudyArgs& args) {
  ts::TrialConfig cfg;
  cfg.n_values = parse_range(args.n);
  cfg.hamming = args.hamming;
  cfg.trials = args.trials.value_or(args.hamming ? 100 : 200);
  cfg.seed = args.seed;
  cfg.strategy = ts::strategy_from_name(args.strategy);
  cfg.lowering = ts::lowering_from_name(args.lower);
  cfg.optimize = !args.no_optimize;
  cfg.threads = args.threads;
  if (cfg.trials == 0) throw UsageError("--trials must be positive");
  if (cfg.hamming) {
    for (unsigned n : cfg.n_values) {
      if (*cfg.hamming == 0 || *cfg.hamming > n) {
        throw UsageError("--hamming " + std::to_string(*cfg.hamming) + " impossible for n=" +
                         std::to_string(n));
      }
    }
  }
  const ts::StatsTable table = ts::run_count_study(cfg);
  const std::string csv_path =
      args.out.empty() ? ts::study_file_name(cfg.strategy, cfg.seed) : args.out;
  write_file(csv_path, ts::export_stats(table, ts::StatsFormat::csv));
  const std::string md = ts::export_stats(table, ts::StatsFormat::markdown);
  write_file(std::filesystem::path(csv_path).replace_extension(".md").string(), md);
  std::cout << md;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthesize, verify and benchmark basis-state transposition circuits"};
  app.require_subcommand(1);

  SynthArgs synth;
  auto* s = app.add_subcommand("synth", "Synthesize a transposition circuit");
  s->add_option("--a", synth.a, "First basis state, bit i = qubit i")->required();
  s->add_option("--b", synth.b, "Second basis state")->required();
  s->add_option("--strategy", synth.strategy)
      ->check(CLI::IsMember({"thm3_a", "thm3_b", "gray"}))
      ->capture_default_str();
  s->add_option("--lower", synth.lower)
      ->check(CLI::IsMember({"none", "naive", "inverse_aware"}))
      ->capture_default_str();
  s->add_flag("--optimize", synth.optimize, "Run remove_redundancies after each stage");
  s->add_option("--out", synth.out, "Output path (default: standard output)");
  s->add_option("--format", synth.format)
      ->check(CLI::IsMember({"text", "qasm2"}))
      ->capture_default_str();

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check a circuit by exhaustive simulation");
  v->add_option("--circuit", verify.circuit, "Circuit file (text or OpenQASM 2.0)")->required();
  auto* va = v->add_option("--a", verify.a);
  auto* vb = v->add_option("--b", verify.b);
  auto* vm = v->add_option("--mcx", verify.mcx, "Check a C^kX gate: n=<k>");
  vm->excludes(va)->excludes(vb);
  v->add_flag("--json", verify.json, "Print the full report as JSON");

  StudyArgs study;
  auto* st = app.add_subcommand("study", "Gate-count statistics over random transpositions");
  st->add_option("--n", study.n, "Register widths, lo..hi inclusive")->capture_default_str();
  st->add_option("--trials", study.trials, "Trials per n (default 200, 100 with --hamming)");
  st->add_option("--strategy", study.strategy)
      ->check(CLI::IsMember({"thm3_a", "thm3_b", "gray"}))
      ->capture_default_str();
  st->add_option("--seed", study.seed)->capture_default_str();
  st->add_option("--hamming", study.hamming, "Fix the Hamming distance of each pair");
  st->add_option("--lower", study.lower)
      ->check(CLI::IsMember({"none", "naive", "inverse_aware"}))
      ->capture_default_str();
  st->add_flag("--no-optimize", study.no_optimize);
  st->add_option("--threads", study.threads, "Worker threads (0: all cores)");
  st->add_option("--out", study.out, "CSV path (default study_<strategy>_<seed>.csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (s->parsed()) return cmd_synth(synth);
    if (v->parsed()) return cmd_verify(verify);
    return cmd_study(study);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
