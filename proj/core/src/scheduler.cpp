#include "linq/scheduler.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "linq/error.hpp"

namespace linq {

namespace {

struct GateSpan {
  int lo = 0; // smallest operand ion, 0 for operand-free gates
  int hi = 0; // largest operand ion
};

GateSpan span_of(const NativeGate& g) {
  GateSpan s;
  if (g.operand_count() == 0) {
    return s; // a barrier fits any window
  }
  s.lo = g.q1 < 0 ? g.q0 : std::min(g.q0, g.q1);
  s.hi = g.q1 < 0 ? g.q0 : std::max(g.q0, g.q1);
  return s;
}

bool fits_window(const GateSpan& s, int p, int head_size) {
  return s.lo >= p && s.hi <= p + head_size - 1;
}

} // namespace

std::vector<int> executable_set(int head_position, const RoutedCircuit& routed,
                                int head_size,
                                const std::vector<bool>& executed) {
  const Circuit& c = routed.circuit;
  std::vector<int> batch;
  // Remaining predecessor counts relative to the executed set, filled lazily
  // for pending gates only.
  std::vector<int> blocked(c.gate_count(), 0);
  std::set<int> ready; // frontier gates that fit, drained in index order

  auto try_ready = [&](int i) {
    if (fits_window(span_of(c.gates[i]), head_position, head_size)) {
      ready.insert(i);
    }
  };

  for (int i = 0; i < c.gate_count(); ++i) {
    if (executed[i]) {
      continue;
    }
    for (int p : c.preds[i]) {
      if (!executed[p]) {
        ++blocked[i];
      }
    }
    if (blocked[i] == 0) {
      try_ready(i);
    }
  }
  while (!ready.empty()) {
    int i = *ready.begin();
    ready.erase(ready.begin());
    batch.push_back(i);
    for (int s : c.succs[i]) {
      if (!executed[s] && --blocked[s] == 0) {
        try_ready(s);
      }
    }
  }
  // `batch` drains an index-ordered frontier, but a successor may carry a
  // smaller index than a gate still waiting in `ready`; restore topo-safe
  // index order (list order is topological).
  std::sort(batch.begin(), batch.end());
  return batch;
}

Schedule schedule(const RoutedCircuit& routed, int tape_ions, int head_size) {
  const Circuit& c = routed.circuit;
  if (head_size < 1 || head_size > tape_ions) {
    throw ContractViolation("head_size must satisfy 1 <= L <= tape_ions");
  }
  for (const NativeGate& g : c.gates) {
    if (is_two_qubit(g.kind) && std::abs(g.q0 - g.q1) > head_size - 1) {
      throw ContractViolation(
          "unschedulable gate: operand distance exceeds head size");
    }
  }

  Schedule sched;
  sched.tape_ions = tape_ions;
  sched.head_size = head_size;

  const int positions = tape_ions - head_size + 1;
  std::vector<bool> executed(c.gate_count(), false);
  int remaining = c.gate_count();
  int current = -1; // no head position before the first placement

  // Per-round scratch reused across positions: blocked counts relative to
  // the executed set, plus each gate's window interval.
  std::vector<int> base_blocked(c.gate_count(), 0);
  std::vector<GateSpan> spans(c.gate_count());
  for (int i = 0; i < c.gate_count(); ++i) {
    spans[i] = span_of(c.gates[i]);
  }

  // mark[i] identifies the (round, position) whose batch gate i joined, so
  // the scratch array never needs clearing between position scans.
  std::vector<long long> mark(c.gate_count(), -1);
  long long round = 0;

  while (remaining > 0) {
    for (int i = 0; i < c.gate_count(); ++i) {
      base_blocked[i] = 0;
      if (!executed[i]) {
        for (int p : c.preds[i]) {
          if (!executed[p]) {
            ++base_blocked[i];
          }
        }
      }
    }

    int best_p = -1;
    int best_count = -1;
    for (int p = 0; p < positions; ++p) {
      // One pass in list order decides the closure (predecessors always have
      // smaller indices): a gate joins the batch when it fits the window and
      // every pending predecessor already joined.
      const long long stamp = round * positions + p;
      int count = 0;
      for (int i = 0; i < c.gate_count(); ++i) {
        if (executed[i] || !fits_window(spans[i], p, head_size)) {
          continue;
        }
        bool ok = true;
        if (base_blocked[i] > 0) {
          for (int pr : c.preds[i]) {
            if (!executed[pr] && mark[pr] != stamp) {
              ok = false;
              break;
            }
          }
        }
        if (ok) {
          mark[i] = stamp;
          ++count;
        }
      }
      bool better;
      if (count != best_count) {
        better = count > best_count;
      } else if (current >= 0) {
        int d_new = std::abs(p - current);
        int d_best = std::abs(best_p - current);
        better = d_new < d_best || (d_new == d_best && p < best_p);
      } else {
        better = p < best_p;
      }
      if (better) {
        best_p = p;
        best_count = count;
      }
    }
    if (best_count <= 0) {
      throw ContractViolation("scheduler made no progress; circuit has a gate "
                              "that fits no head position");
    }

    ScheduleStep step;
    step.head_position = best_p;
    step.gates = executable_set(best_p, routed, head_size, executed);
    for (int i : step.gates) {
      executed[i] = true;
    }
    remaining -= static_cast<int>(step.gates.size());
    if (current >= 0 && best_p != current) {
      ++sched.move_count;
      sched.move_distance_slots += std::abs(best_p - current);
    }
    current = best_p;
    sched.steps.push_back(std::move(step));
    ++round;
  }
  return sched;
}

} // namespace linq
