#pragma once

#include <vector>

#include "linq/router.hpp"

namespace linq {

struct ScheduleStep {
  int head_position = 0;          // leftmost ion covered by the head
  std::vector<int> gates;         // routed-circuit gate indices, topo order
};

struct Schedule {
  int tape_ions = 0;
  int head_size = 0;
  std::vector<ScheduleStep> steps;
  int move_count = 0;             // position changes; the first placement is free
  long long move_distance_slots = 0;

  int step_count() const { return static_cast<int>(steps.size()); }
};

/// Fixpoint batch at one head position: DAG-frontier gates whose operands fit
/// the window [p, p+L-1], closed under newly unblocked gates. `executed`
/// flags gates already done. The batch comes back in a topological order.
std::vector<int> executable_set(int head_position, const RoutedCircuit& routed,
                                int head_size,
                                const std::vector<bool>& executed);

/// Greedy tape-movement scheduling: each round picks the head position with
/// the most executable gates (ties: closest to the current position, then
/// the smaller position) and drains it. Throws ContractViolation if a gate
/// can never fit under the head.
Schedule schedule(const RoutedCircuit& routed, int tape_ions, int head_size);

} // namespace linq
