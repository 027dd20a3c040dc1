#pragma once

#include <cstdint>
#include <string>

namespace linq {

enum class BenchFamily { Adder, BV, QAOA, RCS, QFT, LongRange };

const char* to_string(BenchFamily family);

/// Parses a case-insensitive family name (adder, bv, qaoa, rcs, qft,
/// longrange). Throws GeneratorError on an unknown name.
BenchFamily family_from_string(const std::string& name);

struct BenchmarkSpec {
  BenchFamily family = BenchFamily::QFT;
  int qubit_count = 0;
  std::uint64_t seed = 0;

  // Family-specific knobs. Defaults are sized so the 64-qubit instances land
  // near the reference two-qubit gate counts used throughout the tests
  // (ADDER 545, BV 64, QAOA 1260, RCS 560, QFT 4032).
  int qaoa_layers = 10;
  double qaoa_edge_probability = 0.0; // 0 = ring MaxCut; > 0 = seeded random graph
  int rcs_layers = 18;
  int longrange_gates_per_qubit = 16;
  double longrange_long_fraction = 0.3;
};

/// Emits a deterministic `.lqasm` program for the given spec. The header
/// comment records family, size, seed, and generator version. Notes per
/// family:
///  - Adder: ripple-carry on k-bit registers, needs qubit_count = 3k + 1.
///  - BV: qubit_count secret bits, all-ones secret; the circuit itself uses
///    qubit_count + 1 qubits (one oracle ancilla).
///  - QFT: no final reversal swaps; each controlled phase expands to two CX.
/// Throws GeneratorError for invalid sizes.
std::string generate(const BenchmarkSpec& spec);

} // namespace linq
