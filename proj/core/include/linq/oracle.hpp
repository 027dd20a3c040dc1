#pragma once

#include <complex>
#include <string>
#include <vector>

#include "linq/frontend.hpp"
#include "linq/router.hpp"
#include "linq/scheduler.hpp"

namespace linq {

/// Hard caps for the exhaustive searches. Within the caps every search
/// terminates; beyond them the oracles throw OracleOverflow instead of
/// guessing.
struct OracleBudget {
  int max_ions = 10;
  int max_gates = 8;
  long long max_states = 2'000'000;
};

/// Exact minimum number of tape moves that can execute the routed circuit:
/// breadth-first search over (head position, executed set) states. Gates,
/// windows, and dependencies are re-derived here independently of the
/// scheduler. Throws OracleOverflow when the instance exceeds the budget.
int optimal_moves(const RoutedCircuit& routed, int tape_ions, int head_size,
                  const OracleBudget& budget);

struct ReplayResult {
  bool ok = true;
  std::string diagnostic;
};

/// Replays a schedule gate by gate, tracking the ion<->logical mapping
/// through every inserted swap. Passes iff every executed gate acts on the
/// ions currently holding its original logical operands, dependency order
/// holds, every gate fits its window, and the final mapping matches the
/// routed circuit's. Failures are results, not errors.
ReplayResult replay_check(const Circuit& original, const RoutedCircuit& routed,
                          const Schedule& schedule);

/// Dense unitary of a gate list on `qubit_count` wires, built from the
/// oracle's own gate-matrix table (row-major, dimension 2^n, qubit 0 is the
/// most significant index bit). Throws OracleOverflow for more than 5 qubits.
std::vector<std::complex<double>>
circuit_unitary(const std::vector<SourceGate>& gates, int qubit_count);

/// Compares two circuits up to global phase and a final wire permutation:
/// checks U_b = phase * P * U_a where P routes the content of wire x of `a`
/// to wire permutation[x]. Pass an empty permutation for identity.
bool unitary_equal(const std::vector<SourceGate>& a,
                   const std::vector<SourceGate>& b, int qubit_count,
                   const std::vector<int>& permutation, double tol);

} // namespace linq
