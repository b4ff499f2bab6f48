#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "transposynth/peephole.hpp"
#include "transposynth/pipeline.hpp"
#include "transposynth/simulator.hpp"
#include "transposynth/transposition.hpp"

using namespace transposynth;

namespace {

std::pair<std::uint64_t, std::uint64_t> random_pair(std::mt19937_64& rng, unsigned n) {
  const std::uint64_t mask = (n == 64) ? ~0ULL : (1ULL << n) - 1;
  std::uint64_t a = rng() & mask, b;
  do b = rng() & mask; while (b == a);
  return {a, b};
}

constexpr SynthesisStrategy kFlagStrategies[] = {SynthesisStrategy::thm3_a,
                                                 SynthesisStrategy::thm3_b};

}  // namespace

TEST(TranspositionSpec, Validation) {
  EXPECT_THROW(TranspositionSpec::parse("01", "01"), CircuitError);
  EXPECT_THROW(TranspositionSpec::parse("01", "011"), CircuitError);
  EXPECT_THROW(TranspositionSpec::parse("0a", "01"), std::invalid_argument);
  EXPECT_EQ(TranspositionSpec::parse("0011", "0101").n(), 4U);
}

TEST(ControlledU, CnotPerDifferingBit) {
  EXPECT_EQ(count_gates(controlled_u_ab(TranspositionSpec::parse("000", "111"), QubitId{3},
                                        data_qubits(3)))
                .cnot,
            3U);
  EXPECT_EQ(count_gates(controlled_u_ab(TranspositionSpec::parse("0001", "1110"), QubitId{4},
                                        data_qubits(4)))
                .cnot,
            4U);
  Circuit one = controlled_u_ab(TranspositionSpec::parse("10", "11"), QubitId{2}, data_qubits(2));
  ASSERT_EQ(one.size(), 1U);
  EXPECT_EQ(one.gates()[0], Gate::cnot(2, 1));
  EXPECT_THROW(controlled_u_ab(TranspositionSpec::parse("10", "11"), QubitId{1}, data_qubits(2)),
               CircuitError);
}

TEST(ControlledU, FlagOneMapsAToB) {
  const auto spec = TranspositionSpec::parse("0001", "1110");
  Circuit c = controlled_u_ab(spec, QubitId{4}, data_qubits(4));
  std::uint64_t in = spec.a().bits() | (1ULL << 4);
  EXPECT_EQ(run_reversible(c, BasisState(5, in)).bits(), spec.b().bits() | (1ULL << 4));
}

TEST(ProjectorControlledX, XSandwich) {
  Circuit ones = projector_controlled_x(BitString::parse("111"), data_qubits(3), QubitId{3});
  EXPECT_EQ(count_gates(ones).x, 0U);
  EXPECT_EQ(count_gates(ones).mcx, 1U);
  Circuit zeros = projector_controlled_x(BitString::parse("0000"), data_qubits(4), QubitId{4});
  EXPECT_EQ(count_gates(zeros).x, 8U);
  EXPECT_THROW(projector_controlled_x(BitString::parse("01"), data_qubits(2), QubitId{1}),
               CircuitError);
}

TEST(ProjectorControlledX, FlipsOnlyOnPattern) {
  // pattern "01": qubit 0 reads 0, qubit 1 reads 1
  Circuit c = projector_controlled_x(BitString::parse("01"), data_qubits(2), QubitId{2});
  for (std::uint64_t s = 0; s < 8; ++s) {
    const bool match = (s & 3) == 0b10;
    EXPECT_EQ(run_reversible(c, BasisState(3, s)).bits(), match ? s ^ 4 : s);
  }
}

TEST(SynthesizeTransposition, ThmBFiveQubitsIsFourteenToffolis) {
  Circuit c = synthesize_transposition(TranspositionSpec::parse("01101", "10011"),
                                       SynthesisStrategy::thm3_b);
  EXPECT_EQ(count_gates(c).toffoli, 14U);
  EXPECT_EQ(c.qubits_with_role(QubitRole::clean_ancilla).size(), 4U);
}

TEST(SynthesizeTransposition, ThmAFourQubits) {
  Circuit c = synthesize_transposition(TranspositionSpec::parse("0110", "1101"),
                                       SynthesisStrategy::thm3_a);
  EXPECT_LE(count_gates(c).toffoli, 12U);
  EXPECT_EQ(c.qubits_with_role(QubitRole::clean_ancilla).size(), 2U);
}

TEST(SynthesizeTransposition, ThreeQubitCase) {
  for (auto s : kFlagStrategies) {
    Circuit c = synthesize_transposition(TranspositionSpec::parse("010", "111"), s);
    GateCounts g = count_gates(c);
    EXPECT_EQ(g.h, 2U);
    EXPECT_LE(g.x, 12U);
    EXPECT_LE(g.cnot, 6U);
    EXPECT_EQ(g.toffoli, 6U);
    EXPECT_EQ(c.qubits_with_role(QubitRole::clean_ancilla).size(), 2U);
  }
}

TEST(SynthesizeTransposition, TwoQubitsStatevector) {
  const auto spec = TranspositionSpec::parse("00", "11");
  for (auto s : kFlagStrategies) {
    Circuit c = synthesize_transposition(spec, s);
    ASSERT_EQ(c.num_qubits(), 3U);
    const std::uint64_t expect[4] = {0b11, 0b01, 0b10, 0b00};
    for (std::uint64_t x = 0; x < 4; ++x) {
      StateVector sv = run_statevector(c, BasisState(3, x));
      for (std::uint64_t k = 0; k < 8; ++k) {
        EXPECT_NEAR(std::abs(sv[k]), k == expect[x] ? 1.0 : 0.0, 1e-9);
      }
    }
  }
}

TEST(SynthesizeTransposition, SemanticsOnSeededPairs) {
  std::mt19937_64 rng(2024);
  for (unsigned n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      auto [a, b] = random_pair(rng, n);
      TranspositionSpec spec(BitString(n, a), BitString(n, b));
      for (auto s : kFlagStrategies) {
        ASSERT_TRUE(oracle::implements_transposition(synthesize_transposition(spec, s), n, a, b))
            << "n=" << n << " a=" << a << " b=" << b;
      }
    }
  }
}

TEST(SynthesizeTransposition, ResourceCaps) {
  std::mt19937_64 rng(99);
  for (unsigned n = 1; n <= 14; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      auto [a, b] = random_pair(rng, n);
      TranspositionSpec spec(BitString(n, a), BitString(n, b));
      for (auto s : kFlagStrategies) {
        Circuit c = synthesize_transposition(spec, s);
        GateCounts g = count_gates(c);
        EXPECT_EQ(g.h, 2U);
        EXPECT_LE(g.x, 4 * n);
        EXPECT_LE(count_gates(remove_redundancies(c)).x, 3 * n);
        const unsigned small_toffoli[] = {0, 0, 2, 6}, small_cnot[] = {0, 4, 4, 6};
        if (n <= 3) {
          EXPECT_LE(g.toffoli, small_toffoli[n]);
          EXPECT_LE(g.cnot, small_cnot[n]);
          continue;
        }
        EXPECT_LE(g.cnot, 2 * n);
        if (s == SynthesisStrategy::thm3_a) {
          EXPECT_LE(g.toffoli, 12 * n - 36);
        } else {
          EXPECT_EQ(g.toffoli, 4 * n - 6);
        }
      }
    }
  }
}

TEST(SynthesizeTransposition, InvolutionOnFullRegister) {
  const auto spec = TranspositionSpec::parse("1001", "0111");
  for (auto s : kFlagStrategies) {
    Circuit c = synthesize_transposition(spec, s);
    Circuit twice = concat(c, c);
    for (std::uint64_t x = 0; x < (1ULL << c.num_qubits()); ++x) {
      oracle::State out = oracle::run(twice, x);
      ASSERT_EQ(out.size(), 1U);
      EXPECT_EQ(out.begin()->first, x);
      EXPECT_NEAR(std::abs(out.begin()->second - oracle::Amp(1, 0)), 0.0, 1e-9);
    }
  }
}

TEST(SynthesizeTransposition, SymmetricInAAndB) {
  std::mt19937_64 rng(5);
  for (unsigned n = 2; n <= 10; ++n) {
    auto [a, b] = random_pair(rng, n);
    TranspositionSpec spec(BitString(n, a), BitString(n, b));
    for (auto s : kFlagStrategies) {
      EXPECT_EQ(count_gates(synthesize_transposition(spec, s)),
                count_gates(synthesize_transposition(spec.swapped(), s)));
    }
  }
}

TEST(SynthesizeTransposition, SharedOrderKeepsSemantics) {
  const auto spec = TranspositionSpec::parse("00101", "00011");
  CompileOptions opt{SynthesisStrategy::thm3_b, Lowering::none, true, ProjectorOrder::shared};
  Circuit shared = compile_transposition(spec, opt);
  EXPECT_TRUE(oracle::implements_transposition(shared, 5, spec.a().bits(), spec.b().bits()));
  EXPECT_LT(count_gates(shared).toffoli, 14U);
}

TEST(GrayCode, AdjacentStatesNeedOneStep) {
  Circuit c = synthesize_gray_code(TranspositionSpec::parse("0110", "0111"));
  GateCounts g = count_gates(c);
  EXPECT_EQ(g.mcx, 1U);
  EXPECT_EQ(g.total - g.x, 1U);
}

TEST(GrayCode, ThreeQubitsAllStates) {
  Circuit c = synthesize_gray_code(TranspositionSpec::parse("000", "111"));
  EXPECT_EQ(c.num_qubits(), 3U);
  for (std::uint64_t x = 0; x < 8; ++x) {
    std::uint64_t expect = x == 0 ? 7 : x == 7 ? 0 : x;
    EXPECT_EQ(run_reversible(c, BasisState(3, x)).bits(), expect);
  }
}

TEST(GrayCode, LoweredSemantics) {
  std::mt19937_64 rng(11);
  for (unsigned n = 1; n <= 7; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      auto [a, b] = random_pair(rng, n);
      TranspositionSpec spec(BitString(n, a), BitString(n, b));
      Circuit c = synthesize_transposition(spec, SynthesisStrategy::gray_code);
      EXPECT_EQ(count_gates(c).mcx, 0U);
      EXPECT_TRUE(oracle::implements_transposition(c, n, a, b));
    }
  }
}

TEST(GrayCode, CostlierThanThmBAtLargeDistance) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto [a, b] = random_pair(rng, 6);
    TranspositionSpec spec(BitString(6, a), BitString(6, b));
    if (std::popcount(a ^ b) < 4) continue;
    EXPECT_GT(count_gates(synthesize_transposition(spec, SynthesisStrategy::gray_code)).total,
              count_gates(synthesize_transposition(spec, SynthesisStrategy::thm3_b)).total);
  }
}
