#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "transposynth/clifford_t.hpp"
#include "transposynth/peephole.hpp"
#include "transposynth/pipeline.hpp"
#include "transposynth/simulator.hpp"

using namespace transposynth;

namespace {

std::size_t single_qubit(const GateCounts& g) { return g.h + g.x + g.t_type + g.s_type; }

// Two circuits agree on every basis state up to one global phase.
void expect_same_action(const Circuit& lhs, const Circuit& rhs) {
  ASSERT_EQ(lhs.num_qubits(), rhs.num_qubits());
  std::optional<oracle::Amp> ratio;
  for (std::uint64_t x = 0; x < (1ULL << lhs.num_qubits()); ++x) {
    oracle::State l = oracle::run(lhs, x), r = oracle::run(rhs, x);
    ASSERT_EQ(l.size(), r.size());
    for (const auto& [k, a] : l) {
      ASSERT_TRUE(r.count(k)) << "basis " << x;
      if (!ratio) ratio = a / r.at(k);
      EXPECT_LT(std::abs(a - *ratio * r.at(k)), 1e-9);
    }
  }
}

}  // namespace

TEST(LowerToffoli, StandardSequence) {
  const unsigned c1 = 0, c2 = 1, t = 2;
  std::vector<Gate> expect{Gate::h(t),      Gate::cnot(c2, t), Gate::tdg(t),       Gate::cnot(c1, t),
                           Gate::t(t),      Gate::cnot(c2, t), Gate::tdg(t),       Gate::cnot(c1, t),
                           Gate::tdg(c2),   Gate::t(t),        Gate::cnot(c1, c2), Gate::h(t),
                           Gate::tdg(c2),   Gate::cnot(c1, c2), Gate::t(c1),       Gate::s(c2)};
  EXPECT_EQ(lower_toffoli(Gate::toffoli(c1, c2, t)).gates(), expect);
}

TEST(LowerToffoli, InvertedSequence) {
  const unsigned c1 = 0, c2 = 1, t = 2;
  std::vector<Gate> expect{Gate::sdg(c2),     Gate::tdg(c1),     Gate::cnot(c1, c2), Gate::t(c2),
                           Gate::h(t),        Gate::cnot(c1, c2), Gate::tdg(t),      Gate::t(c2),
                           Gate::cnot(c1, t), Gate::t(t),        Gate::cnot(c2, t),  Gate::tdg(t),
                           Gate::cnot(c1, t), Gate::t(t),        Gate::cnot(c2, t),  Gate::h(t)};
  Circuit inv = lower_toffoli(Gate::toffoli(c1, c2, t), ToffoliOrientation::inverted);
  EXPECT_EQ(inv.gates(), expect);
  EXPECT_EQ(inv, inverse(lower_toffoli(Gate::toffoli(c1, c2, t))));
}

TEST(LowerToffoli, MatchesToffoliOnAllBasisStates) {
  for (auto o : {ToffoliOrientation::standard, ToffoliOrientation::inverted}) {
    Circuit c = lower_toffoli(Gate::toffoli(0, 1, 2), o);
    for (std::uint64_t x = 0; x < 8; ++x) {
      StateVector sv = run_statevector(c, BasisState(3, x));
      const std::uint64_t image = (x & 3) == 3 ? x ^ 4 : x;
      for (std::uint64_t k = 0; k < 8; ++k) {
        EXPECT_NEAR(std::abs(sv[k] - (k == image ? Amplitude(1) : Amplitude(0))), 0.0, 1e-9);
      }
    }
  }
  EXPECT_THROW(lower_toffoli(Gate::cnot(0, 1)), CircuitError);
}

TEST(LowerAllToffolis, NaiveCountLaw) {
  Circuit c = synthesize_transposition(TranspositionSpec::parse("01011", "10110"),
                                       SynthesisStrategy::thm3_a);
  GateCounts before = count_gates(c);
  GateCounts after = count_gates(lower_all_toffolis(c));
  EXPECT_EQ(after.cnot, before.cnot + 6 * before.toffoli);
  EXPECT_EQ(after.t_type, 7 * before.toffoli);
  EXPECT_EQ(after.toffoli, 0U);

  Circuit single(3);
  single.append(Gate::toffoli(0, 1, 2));
  GateCounts g = count_gates(lower_all_toffolis(single));
  EXPECT_EQ(g.cnot, 6U);
  EXPECT_EQ(g.t_type, 7U);
}

TEST(LowerAllToffolis, AdjacentPairVanishes) {
  Circuit c(3);
  c.append(Gate::toffoli(0, 1, 2));
  c.append(Gate::toffoli(1, 0, 2));
  EXPECT_TRUE(remove_redundancies(lower_all_toffolis(c, ToffoliPairing::inverse_aware)).empty());
}

TEST(LowerAllToffolis, PairAroundTargetWireGate) {
  for (const Gate& mid : {Gate::x(2), Gate::cnot(3, 2), Gate::t(2)}) {
    Circuit c(4);
    c.append(Gate::toffoli(0, 1, 2));
    c.append(mid);
    c.append(Gate::toffoli(0, 1, 2));
    Circuit out = remove_redundancies(lower_all_toffolis(c, ToffoliPairing::inverse_aware));
    GateCounts g = count_gates(out);
    GateCounts m = count_gates(std::span<const Gate>(&mid, 1));
    EXPECT_EQ(g.cnot - m.cnot, 8U);
    EXPECT_EQ(single_qubit(g) - single_qubit(m), 12U);
    expect_same_action(out, c);
  }
}

TEST(LowerAllToffolis, PairAroundDisjointGateCollapses) {
  Circuit c(4);
  c.append(Gate::toffoli(0, 1, 2));
  c.append(Gate::x(3));
  c.append(Gate::toffoli(0, 1, 2));
  Circuit out = remove_redundancies(lower_all_toffolis(c, ToffoliPairing::inverse_aware));
  ASSERT_EQ(out.size(), 1U);
  EXPECT_EQ(out.gates()[0], Gate::x(3));
}

TEST(LowerAllToffolis, NoPairingAcrossControlTouch) {
  Circuit c(3);
  c.append(Gate::toffoli(0, 1, 2));
  c.append(Gate::x(0));
  c.append(Gate::toffoli(0, 1, 2));
  Circuit aware = lower_all_toffolis(c, ToffoliPairing::inverse_aware);
  EXPECT_EQ(aware, lower_all_toffolis(c, ToffoliPairing::naive));
}

TEST(LowerAllToffolis, RejectsMcx) {
  Circuit c(4);
  c.append(Gate::mcx(qubits({0, 1, 2}), QubitId{3}));
  EXPECT_THROW(lower_all_toffolis(c), CircuitError);
}

TEST(LowerAllToffolis, SemanticsAndNeverWorseThanNaive) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned n = 5;
    Circuit c(n);
    for (int k = 0; k < 8; ++k) {
      unsigned q[3];
      for (unsigned i = 0; i < 3; ++i) {
        do q[i] = static_cast<unsigned>(rng() % n);
        while (std::find(q, q + i, q[i]) != q + i);
      }
      switch (rng() % 4) {
        case 0:
          c.append(Gate::x(q[0]));
          break;
        case 1:
          c.append(Gate::cnot(q[0], q[1]));
          break;
        default:
          c.append(Gate::toffoli(q[0], q[1], q[2]));
      }
    }
    Circuit naive = remove_redundancies(lower_all_toffolis(c, ToffoliPairing::naive));
    Circuit aware = remove_redundancies(lower_all_toffolis(c, ToffoliPairing::inverse_aware));
    EXPECT_LE(count_gates(aware).total, count_gates(naive).total);
    expect_same_action(naive, c);
    expect_same_action(aware, c);
  }
}

TEST(Pipeline, LoweredTranspositionsStillVerify) {
  std::mt19937_64 rng(8);
  for (unsigned n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      std::uint64_t a = rng() % (1ULL << n), b;
      do b = rng() % (1ULL << n); while (b == a);
      TranspositionSpec spec(BitString(n, a), BitString(n, b));
      for (auto s : {SynthesisStrategy::thm3_a, SynthesisStrategy::thm3_b,
                     SynthesisStrategy::gray_code}) {
        for (auto l : {Lowering::naive, Lowering::inverse_aware}) {
          Circuit c = compile_transposition(spec, {s, l, true});
          EXPECT_TRUE(oracle::implements_transposition(c, n, a, b));
        }
      }
    }
  }
}
