#include "linq/noise.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "linq/error.hpp"

namespace linq {

void NoiseParams::validate() const {
  if (gamma < 0 || epsilon < 0 || k0 < 0) {
    throw ContractViolation("noise rates must be nonnegative");
  }
  if (n_ref < 1) {
    throw ContractViolation("n_ref must be at least 1");
  }
  if (single_qubit_error < 0 || single_qubit_error >= 1) {
    throw ContractViolation("single_qubit_error must lie in [0, 1)");
  }
  if (swap_cost_factor < 1) {
    throw ContractViolation("swap_cost_factor must be at least 1");
  }
  if (!(shuttle_rate_um_per_us > 0)) {
    throw ContractViolation("shuttle_rate must be positive");
  }
  if (ion_spacing_um < 0 || tau_1q_us < 0) {
    throw ContractViolation("ion_spacing and tau_1q must be nonnegative");
  }
}

double NoiseParams::quanta_per_move(int chain_ions) const {
  return k0 * std::sqrt(static_cast<double>(chain_ions) / n_ref);
}

double gate_time_us(int distance_slots) {
  if (distance_slots < 1) {
    throw ContractViolation("two-qubit gate distance must be at least 1 slot");
  }
  return 38.0 * distance_slots + 10.0;
}

double two_qubit_fidelity(int distance_slots, int moves, int chain_ions,
                          const NoiseParams& p) {
  if (moves < 0 || chain_ions < 1) {
    throw ContractViolation("two_qubit_fidelity: moves >= 0 and n >= 1");
  }
  double k = p.quanta_per_move(chain_ions);
  double tau = gate_time_us(distance_slots);
  double f = 1.0 - p.gamma * tau +
             (1.0 - std::pow(1.0 + p.epsilon, 2.0 * moves * k + 1.0));
  return std::clamp(f, 0.0, 1.0);
}

namespace {

// Duration of one routed gate in microseconds. A SWAP is priced as
// swap_cost_factor back-to-back two-qubit interactions at its distance.
double gate_duration_us(const NativeGate& g, const NoiseParams& p) {
  switch (g.kind) {
  case GateKind::Barrier:
    return 0.0;
  case GateKind::RX:
  case GateKind::RY:
  case GateKind::RZ:
    return p.tau_1q_us;
  case GateKind::XX:
    return gate_time_us(std::abs(g.q0 - g.q1));
  case GateKind::Swap:
    return p.swap_cost_factor * gate_time_us(std::abs(g.q0 - g.q1));
  }
  return 0.0;
}

} // namespace

FidelityReport evaluate(const Schedule& schedule, const RoutedCircuit& routed,
                        const NoiseParams& p) {
  p.validate();
  const Circuit& c = routed.circuit;
  const int n = schedule.tape_ions;

  FidelityReport report;
  report.move_count = schedule.move_count;
  report.move_distance_slots = schedule.move_distance_slots;
  report.move_distance_um = schedule.move_distance_slots * p.ion_spacing_um;
  report.per_gate.reserve(c.gate_count());

  double gate_time_total_us = 0.0;
  int moves_done = 0;
  int previous_position = -1;
  std::vector<int> layer_of(c.gate_count(), 0);

  for (const ScheduleStep& step : schedule.steps) {
    if (previous_position >= 0 && step.head_position != previous_position) {
      ++moves_done;
    }
    previous_position = step.head_position;

    // Re-level the batch into dependency layers; a layer costs its slowest
    // gate since everything else in it runs in parallel under the head.
    // layer_of is 1-based within the current step and 0 for gates done in
    // earlier steps.
    std::vector<double> layer_time;
    for (int idx : step.gates) {
      int level = 0;
      for (int pr : c.preds[idx]) {
        level = std::max(level, layer_of[pr]);
      }
      const NativeGate& g = c.gates[idx];
      double tau = gate_duration_us(g, p);

      double fidelity = 1.0;
      if (g.kind == GateKind::XX) {
        fidelity = two_qubit_fidelity(std::abs(g.q0 - g.q1), moves_done, n, p);
      } else if (g.kind == GateKind::Swap) {
        double f1 =
            two_qubit_fidelity(std::abs(g.q0 - g.q1), moves_done, n, p);
        for (int r = 0; r < p.swap_cost_factor; ++r) {
          fidelity *= f1;
        }
      } else if (is_rotation(g.kind)) {
        fidelity = 1.0 - p.single_qubit_error;
      }
      fidelity = std::clamp(fidelity, 0.0, 1.0);
      report.success_rate *= fidelity;
      report.per_gate.push_back(GateTrace{idx, moves_done, tau, fidelity});

      layer_of[idx] = level + 1;
      if (static_cast<int>(layer_time.size()) < level + 1) {
        layer_time.resize(level + 1, 0.0);
      }
      layer_time[level] = std::max(layer_time[level], tau);
    }
    for (double t : layer_time) {
      gate_time_total_us += t;
    }
    // Reset in-step layers for the next step.
    for (int idx : step.gates) {
      layer_of[idx] = 0;
    }
  }

  double shuttle_us = report.move_distance_um / p.shuttle_rate_um_per_us;
  report.t_exec_s = (shuttle_us + gate_time_total_us) * 1e-6;
  return report;
}

} // namespace linq
