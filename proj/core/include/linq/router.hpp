#pragma once

#include <span>
#include <vector>

#include "linq/circuit.hpp"

namespace linq {

struct RouterConfig {
  int tape_ions = 0;       // N, chain length in ion slots
  int head_size = 0;       // L, width of the execution zone
  int max_swap_len = 0;    // inserted swaps span at most max_swap_len - 1 slots
  double alpha = 0.5;      // depth discount in the swap score, 0 < alpha < 1
  int lookahead_window = 20; // pending two-qubit gates entering the score

  /// head_size - 2, clamped to the valid range [2, head_size].
  static int default_max_swap_len(int head_size);

  void validate() const; // throws ContractViolation on a bad combination
};

/// Physical circuit produced by routing: operands are ion slots, inserted
/// SWAPs included. `origin[i]` is the source-gate index behind gate i, or
/// -1 for a router-inserted swap. swap_count counts inserted swaps only.
struct RoutedCircuit {
  Circuit circuit;
  std::vector<int> origin;
  int swap_count = 0;
  int opposing_swap_count = 0;
  Mapping initial_mapping;
  Mapping final_mapping;

  double opposing_ratio() const {
    return swap_count == 0
               ? 0.0
               : static_cast<double>(opposing_swap_count) / swap_count;
  }
};

/// Deterministic initial placement: logical qubits ordered by a weighted
/// Cuthill-McKee traversal of the interaction graph (edge weight = number of
/// two-qubit gates on the pair), then refined by weighted-median swaps that
/// strictly reduce the total weighted distance.
Mapping initial_mapping(const Circuit& circuit, const RouterConfig& cfg);

/// Swap score of a candidate mapping: sum over the given two-qubit gates of
/// their mapped distance times alpha^(depth(gate) - current_depth).
double score_mapping(const Mapping& mapping, const Circuit& circuit,
                     std::span<const int> remaining_gates,
                     const RouterConfig& cfg, int current_depth);

struct ResolveResult {
  std::vector<NativeGate> swaps; // ion operands, in insertion order
  int opposing_count = 0;
};

/// Makes one unexecutable gate executable by repeatedly applying the
/// best-scoring swap between an ion strictly between the operands and one of
/// the operands. Candidates are capped at max_swap_len - 1 slots; ties break
/// to the smallest leftmost ion, then the shortest swap. The mapping is
/// updated in place.
ResolveResult resolve_gate(int gate_index, const Circuit& circuit, Mapping& m,
                           const RouterConfig& cfg);

/// Full router: initial placement, then swap insertion per unexecutable gate
/// in list order. Output is deterministic for fixed inputs.
RoutedCircuit route(const Circuit& circuit, const RouterConfig& cfg);

/// Reference router: repeatedly swaps the first operand toward the second in
/// hops of exactly head_size - 1 slots, with no scoring and no lookahead.
RoutedCircuit route_baseline(const Circuit& circuit, const RouterConfig& cfg);

} // namespace linq
