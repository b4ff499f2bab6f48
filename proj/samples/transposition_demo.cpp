// Swap |0110> and |1011>, lower to Clifford+T, tidy up, and check the result.

#include <iostream>

#include "transposynth/transposynth.hpp"

int main() {
  using namespace transposynth;
  const auto spec = TranspositionSpec::parse("0110", "1011");

  for (auto strategy : {SynthesisStrategy::thm3_a, SynthesisStrategy::thm3_b}) {
    for (auto lowering : {Lowering::none, Lowering::naive, Lowering::inverse_aware}) {
      const Circuit c = compile_transposition(spec, {strategy, lowering, true});
      const GateCounts g = count_gates(c);
      QubitList ancillas;
      for (unsigned q = spec.n(); q < c.num_qubits(); ++q) ancillas.emplace_back(q);
      const auto report = verify_transposition(c, spec.a(), spec.b(), data_qubits(spec.n()),
                                               ancillas);
      std::cout << strategy_name(strategy) << " / " << lowering_name(lowering)
                << ": qubits=" << c.num_qubits() << " cnot=" << g.cnot
                << " toffoli=" << g.toffoli << " t=" << g.t_type << " total=" << g.total
                << (report.passed() ? "  verified\n" : "  FAILED\n");
    }
  }

  const Circuit smallest = synthesize_transposition(TranspositionSpec::parse("01", "10"),
                                                    SynthesisStrategy::thm3_b);
  std::cout << '\n' << serialize(smallest, CircuitFormat::text);
}
