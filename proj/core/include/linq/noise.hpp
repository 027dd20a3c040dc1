#pragma once

#include <vector>

#include "linq/router.hpp"
#include "linq/scheduler.hpp"

namespace linq {

/// Physical model parameters. gamma and epsilon have no universal values and
/// must come from the device config; everything else has a documented default.
struct NoiseParams {
  double gamma = 1e-6;            // background heating, fidelity loss per us of gate time
  double epsilon = 1e-2;          // per-gate loop-closure error
  double k0 = 2.0;                // heating quanta per shuttle at the reference chain
  int n_ref = 8;                  // chain length the k0 figure was measured on
  double single_qubit_error = 1e-3;
  int swap_cost_factor = 3;       // two-qubit-gate equivalents per SWAP
  double shuttle_rate_um_per_us = 1.0;
  double ion_spacing_um = 5.0;
  double tau_1q_us = 10.0;        // single-qubit gate time

  void validate() const;

  /// Heating quanta added per move for a chain of n ions: k0 * sqrt(n/n_ref).
  double quanta_per_move(int chain_ions) const;
};

/// Two-qubit gate duration in microseconds: 38*d + 10 for operands d ion
/// slots apart. Throws ContractViolation for d < 1.
double gate_time_us(int distance_slots);

/// Fidelity of a two-qubit gate at operand distance d after m completed tape
/// moves on a chain of n ions:
///   F = 1 - gamma*tau(d) + (1 - (1 + epsilon)^(2*m*k + 1)),  k = k0*sqrt(n/n_ref)
/// clamped to [0, 1].
double two_qubit_fidelity(int distance_slots, int moves, int chain_ions,
                          const NoiseParams& p);

struct GateTrace {
  int gate_index = -1;   // into the routed circuit
  int moves_before = 0;  // completed moves when the gate fires
  double tau_us = 0.0;
  double fidelity = 1.0;
};

struct FidelityReport {
  double success_rate = 1.0;     // product of per-gate fidelities
  int move_count = 0;
  long long move_distance_slots = 0;
  double move_distance_um = 0.0;
  double t_exec_s = 0.0;
  std::vector<GateTrace> per_gate;

  double t_exec_us() const { return t_exec_s * 1e6; }
};

/// Prices a schedule: per-gate fidelities under accumulated shuttling
/// heating, whole-program success rate, and execution time
///   t_exec = move_distance / shuttle_rate + sum over dependency layers of
///            the layer's maximal gate time.
/// SWAPs count as swap_cost_factor two-qubit interactions at their distance;
/// barriers are free.
FidelityReport evaluate(const Schedule& schedule, const RoutedCircuit& routed,
                        const NoiseParams& p);

} // namespace linq
