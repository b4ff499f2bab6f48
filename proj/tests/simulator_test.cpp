#include <gtest/gtest.h>

#include <cstdlib>

#include "oracle.hpp"
#include "transposynth/mcx.hpp"
#include "transposynth/report_json.hpp"
#include "transposynth/simulator.hpp"
#include "transposynth/transposition.hpp"

using namespace transposynth;

TEST(RunReversible, SingleX) {
  Circuit c(1);
  c.append(Gate::x(0));
  EXPECT_EQ(run_reversible(c, BasisState(1, 0)).bits(), 1U);
}

TEST(RunReversible, InterleavedLayoutAllOnesControls) {
  // x1=0, x2=1, a1=2, x3=3, a2=4, x4=5, x5=6
  Circuit c = mcx_borrowed({qubits({0, 1, 3, 5}), QubitId{6}, qubits({2, 4}),
                            AncillaKind::borrowed});
  const std::uint64_t controls = 0b0101011;
  for (std::uint64_t v = 0; v < 8; ++v) {
    std::uint64_t a1 = v & 1, a2 = (v >> 1) & 1, x5 = (v >> 2) & 1;
    std::uint64_t in = controls | (a1 << 2) | (a2 << 4) | (x5 << 6);
    EXPECT_EQ(run_reversible(c, BasisState(7, in)).bits(), in ^ (1ULL << 6));
  }
}

TEST(RunReversible, PyramidTrace) {
  Circuit c = mcx_clean_ladder({qubits({0, 1, 3, 5}), QubitId{6}, qubits({2, 4}),
                                AncillaKind::clean});
  for (std::uint64_t v = 0; v < 32; ++v) {
    std::uint64_t in = (v & 1) | ((v >> 1 & 1) << 1) | ((v >> 2 & 1) << 3) |
                       ((v >> 3 & 1) << 5) | ((v >> 4 & 1) << 6);
    EXPECT_EQ(run_reversible(c, BasisState(7, in)).bits(),
              oracle::mcx_image(in, {0, 1, 3, 5}, 6));
  }
}

TEST(RunReversible, RejectsPhaseGates) {
  Circuit c(1);
  c.append(Gate::h(0));
  EXPECT_THROW(run_reversible(c, BasisState(1, 0)), SimulationError);
  EXPECT_THROW(run_reversible(Circuit(2), BasisState(1, 0)), SimulationError);
}

TEST(RunStatevector, Hadamard) {
  Circuit c(1);
  c.append(Gate::h(0));
  StateVector sv = run_statevector(c, BasisState(1, 0));
  EXPECT_NEAR(sv[0].real(), std::sqrt(0.5), 1e-12);
  EXPECT_NEAR(sv[1].real(), std::sqrt(0.5), 1e-12);
}

TEST(RunStatevector, TwoQubitTransposition) {
  Circuit c = synthesize_transposition(TranspositionSpec::parse("01", "10"),
                                       SynthesisStrategy::thm3_b);
  // "01": qubit 1 set; "10": qubit 0 set
  StateVector sv = run_statevector(c, BasisState(3, 0b010));
  for (std::uint64_t k = 0; k < 8; ++k) {
    EXPECT_NEAR(std::abs(sv[k]), k == 0b001 ? 1.0 : 0.0, 1e-9);
  }
}

TEST(RunStatevector, NormPreservedGateByGate) {
  Circuit c = synthesize_transposition(TranspositionSpec::parse("0110", "1011"),
                                       SynthesisStrategy::thm3_a);
  for (std::uint64_t x = 0; x < 16; ++x) {
    StateVector sv(c.num_qubits(), x);
    for (const Gate& g : c.gates()) {
      sv.apply(g);
      ASSERT_LT(std::abs(1.0 - sv.norm_squared()), 1e-12);
    }
  }
}

TEST(RunStatevector, AgreesWithReversible) {
  Circuit c = mcx_single_clean({qubits({0, 1, 2, 3, 4}), QubitId{5}, qubits({6}),
                                AncillaKind::clean});
  for (std::uint64_t x = 0; x < 128; ++x) {
    StateVector sv = run_statevector(c, BasisState(7, x));
    std::uint64_t y = run_reversible(c, BasisState(7, x)).bits();
    EXPECT_NEAR(std::abs(sv[y]), 1.0, 1e-9);
  }
}

TEST(RunStatevector, CapGuard) {
  Circuit c(21);
  EXPECT_THROW(run_statevector(c, BasisState(21, 0)), SimulationError);
  EXPECT_NO_THROW(run_statevector(Circuit(3), BasisState(3, 0), 3));
  EXPECT_THROW(run_statevector(Circuit(4), BasisState(4, 0), 3), SimulationError);
}

TEST(SimCap, EnvironmentOverride) {
  ::setenv("TRANSPOSYNTH_SIM_CAP", "12", 1);
  EXPECT_EQ(sim_cap_from_env(), 12U);
  ::setenv("TRANSPOSYNTH_SIM_CAP", "junk", 1);
  EXPECT_EQ(sim_cap_from_env(), default_dense_cap);
  ::unsetenv("TRANSPOSYNTH_SIM_CAP");
  EXPECT_EQ(sim_cap_from_env(), default_dense_cap);
}

TEST(VerifyTransposition, ThmBThreeQubits) {
  const auto spec = TranspositionSpec::parse("000", "111");
  Circuit c = synthesize_transposition(spec, SynthesisStrategy::thm3_b);
  auto rep = verify_transposition(c, spec.a(), spec.b(), data_qubits(3), qubits({3, 4}));
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.checked, 8U);
  EXPECT_FALSE(rep.sampled);
}

TEST(VerifyTransposition, SingleXIsTheOneBitSwap) {
  Circuit c(1);
  c.append(Gate::x(0));
  EXPECT_TRUE(verify_transposition(c, BitString::parse("0"), BitString::parse("1"),
                                   data_qubits(1), {})
                  .passed());
}

TEST(VerifyTransposition, IdentityFailsAtAAndB) {
  auto rep = verify_transposition(Circuit(3), BitString::parse("001"), BitString::parse("110"),
                                  data_qubits(3), {});
  EXPECT_FALSE(rep.passed());
  EXPECT_EQ(rep.failed, 2U);
  std::vector<std::string> bad;
  for (const auto& r : rep.records) {
    if (!r.pass) bad.push_back(r.state.to_string());
  }
  EXPECT_EQ(bad, (std::vector<std::string>{"110", "001"}));
}

TEST(VerifyTransposition, DirtyAncillaFails) {
  const auto spec = TranspositionSpec::parse("01", "11");
  Circuit c = synthesize_transposition(spec, SynthesisStrategy::thm3_b);
  c.append(Gate::x(2));
  EXPECT_FALSE(verify_transposition(c, spec.a(), spec.b(), data_qubits(2), qubits({2})).passed());
}

TEST(VerifyTransposition, SamplesAboveCap) {
  const auto spec = TranspositionSpec::parse("0000000", "1010101");
  Circuit c = synthesize_transposition(spec, SynthesisStrategy::thm3_b);
  VerifyOptions opt;
  opt.exhaustive_bits = 4;
  opt.samples = 50;
  QubitList anc;
  for (unsigned q = 7; q < c.num_qubits(); ++q) anc.emplace_back(q);
  auto rep = verify_transposition(c, spec.a(), spec.b(), data_qubits(7), anc, opt);
  EXPECT_TRUE(rep.sampled);
  EXPECT_EQ(rep.checked, 50U);
  EXPECT_TRUE(rep.passed());
}

TEST(VerifyMcx, DecompositionOutputsPass) {
  McxLayout b{qubits({0, 1, 2, 3}), QubitId{4}, qubits({5, 6}), AncillaKind::borrowed};
  auto rep = verify_mcx(mcx_borrowed(b), b);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.checked, 128U);
  McxLayout c{qubits({0, 1, 2, 3, 4}), QubitId{5}, qubits({6, 7, 8}), AncillaKind::clean};
  rep = verify_mcx(mcx_clean_ladder(c), c);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.checked, 64U);
}

TEST(VerifyMcx, DroppedToffoliFails) {
  McxLayout l{qubits({0, 1, 2, 3}), QubitId{4}, qubits({5, 6}), AncillaKind::borrowed};
  Circuit full = mcx_borrowed(l);
  Circuit broken(full.num_qubits(), full.roles());
  broken.append(std::span(full.gates()).subspan(1));
  auto rep = verify_mcx(broken, l);
  EXPECT_FALSE(rep.passed());
  ASSERT_NE(rep.first_failure(), nullptr);
}

TEST(VerificationReport, TextAndJson) {
  auto rep = verify_transposition(Circuit(1), BitString::parse("0"), BitString::parse("1"),
                                  data_qubits(1), {});
  std::string text = report_to_text(rep);
  EXPECT_NE(text.find("FAIL 0 -> 0 expected 1"), std::string::npos);
  EXPECT_NE(text.find("transposition: 0/2 passed"), std::string::npos);
  nlohmann::json j = report_to_json(rep);
  ASSERT_EQ(j["records"].size(), 2U);
  EXPECT_EQ(j["records"][0]["state"], "0");
  EXPECT_EQ(j["records"][0]["expected"], "1");
  EXPECT_EQ(j["records"][0]["actual"], "0");
  EXPECT_EQ(j["records"][0]["pass"], false);
}
