#include "linq/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>

#include "linq/error.hpp"

namespace linq {

namespace {

// ---- exact move search ----------------------------------------------------

struct MoveInstance {
  int gate_count = 0;
  int positions = 0;
  std::vector<int> lo, hi;                // operand span per gate
  std::vector<std::uint64_t> pred_mask;   // predecessor bitmask per gate
};

MoveInstance make_instance(const RoutedCircuit& routed, int tape_ions,
                           int head_size) {
  const Circuit& c = routed.circuit;
  MoveInstance inst;
  inst.gate_count = c.gate_count();
  inst.positions = tape_ions - head_size + 1;
  inst.lo.resize(inst.gate_count);
  inst.hi.resize(inst.gate_count);
  inst.pred_mask.assign(inst.gate_count, 0);
  // Dependencies re-derived from operand overlap, not taken from the DAG
  // under test. A barrier depends on everything before it.
  std::vector<int> last_on_qubit(tape_ions, -1);
  int last_barrier = -1;
  for (int i = 0; i < inst.gate_count; ++i) {
    const NativeGate& g = c.gates[i];
    if (g.operand_count() == 0) {
      inst.lo[i] = -1; // operand-free gates fit every window
      inst.hi[i] = -1;
      for (int j = 0; j < i; ++j) {
        inst.pred_mask[i] |= std::uint64_t{1} << j;
      }
      last_barrier = i;
      for (auto& l : last_on_qubit) {
        l = i;
      }
      continue;
    }
    inst.lo[i] = g.q1 < 0 ? g.q0 : std::min(g.q0, g.q1);
    inst.hi[i] = g.q1 < 0 ? g.q0 : std::max(g.q0, g.q1);
    if (last_barrier >= 0) {
      inst.pred_mask[i] |= std::uint64_t{1} << last_barrier;
    }
    for (int q : {g.q0, g.q1}) {
      if (q >= 0 && last_on_qubit[q] >= 0) {
        inst.pred_mask[i] |= std::uint64_t{1} << last_on_qubit[q];
      }
    }
    for (int q : {g.q0, g.q1}) {
      if (q >= 0) {
        last_on_qubit[q] = i;
      }
    }
  }
  return inst;
}

std::uint64_t closure(const MoveInstance& inst, int p, int head_size,
                      std::uint64_t done) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 0; i < inst.gate_count; ++i) {
      std::uint64_t bit = std::uint64_t{1} << i;
      if ((done & bit) != 0) {
        continue;
      }
      if (inst.lo[i] >= 0 &&
          (inst.lo[i] < p || inst.hi[i] > p + head_size - 1)) {
        continue;
      }
      if ((inst.pred_mask[i] & ~done) != 0) {
        continue;
      }
      done |= bit;
      grew = true;
    }
  }
  return done;
}

// ---- dense unitaries -------------------------------------------------------

using Complex = std::complex<double>;
using Matrix = std::vector<Complex>; // row-major, dim x dim

constexpr double kSqrtHalf = 0.7071067811865476;

void apply_one_qubit(Matrix& u, int dim, int n, int q, const Complex m[4]) {
  const int bit = 1 << (n - 1 - q);
  for (int r = 0; r < dim; ++r) {
    if ((r & bit) != 0) {
      continue;
    }
    const int r1 = r | bit;
    for (int col = 0; col < dim; ++col) {
      Complex a = u[static_cast<std::size_t>(r) * dim + col];
      Complex b = u[static_cast<std::size_t>(r1) * dim + col];
      u[static_cast<std::size_t>(r) * dim + col] = m[0] * a + m[1] * b;
      u[static_cast<std::size_t>(r1) * dim + col] = m[2] * a + m[3] * b;
    }
  }
}

void apply_two_qubit(Matrix& u, int dim, int n, int qa, int qb,
                     const Complex m[16]) {
  const int bit_a = 1 << (n - 1 - qa);
  const int bit_b = 1 << (n - 1 - qb);
  for (int r = 0; r < dim; ++r) {
    if ((r & bit_a) != 0 || (r & bit_b) != 0) {
      continue;
    }
    const int rows[4] = {r, r | bit_b, r | bit_a, r | bit_a | bit_b};
    for (int col = 0; col < dim; ++col) {
      Complex v[4];
      for (int i = 0; i < 4; ++i) {
        v[i] = u[static_cast<std::size_t>(rows[i]) * dim + col];
      }
      for (int i = 0; i < 4; ++i) {
        Complex acc = 0;
        for (int j = 0; j < 4; ++j) {
          acc += m[4 * i + j] * v[j];
        }
        u[static_cast<std::size_t>(rows[i]) * dim + col] = acc;
      }
    }
  }
}

void apply_gate(Matrix& u, int dim, int n, const SourceGate& g) {
  const double c = std::cos(g.angle / 2);
  const double s = std::sin(g.angle / 2);
  switch (g.kind) {
  case SourceKind::H: {
    const Complex m[4] = {kSqrtHalf, kSqrtHalf, kSqrtHalf, -kSqrtHalf};
    apply_one_qubit(u, dim, n, g.q0, m);
    return;
  }
  case SourceKind::X: {
    const Complex m[4] = {0, 1, 1, 0};
    apply_one_qubit(u, dim, n, g.q0, m);
    return;
  }
  case SourceKind::Y: {
    const Complex m[4] = {0, Complex(0, -1), Complex(0, 1), 0};
    apply_one_qubit(u, dim, n, g.q0, m);
    return;
  }
  case SourceKind::Z: {
    const Complex m[4] = {1, 0, 0, -1};
    apply_one_qubit(u, dim, n, g.q0, m);
    return;
  }
  case SourceKind::RX: {
    const Complex m[4] = {c, Complex(0, -s), Complex(0, -s), c};
    apply_one_qubit(u, dim, n, g.q0, m);
    return;
  }
  case SourceKind::RY: {
    const Complex m[4] = {c, -s, s, c};
    apply_one_qubit(u, dim, n, g.q0, m);
    return;
  }
  case SourceKind::RZ: {
    const Complex m[4] = {std::exp(Complex(0, -g.angle / 2)), 0, 0,
                          std::exp(Complex(0, g.angle / 2))};
    apply_one_qubit(u, dim, n, g.q0, m);
    return;
  }
  case SourceKind::CX: {
    const Complex m[16] = {1, 0, 0, 0, 0, 1, 0, 0,
                           0, 0, 0, 1, 0, 0, 1, 0};
    apply_two_qubit(u, dim, n, g.q0, g.q1, m);
    return;
  }
  case SourceKind::CZ: {
    const Complex m[16] = {1, 0, 0, 0, 0, 1, 0, 0,
                           0, 0, 1, 0, 0, 0, 0, -1};
    apply_two_qubit(u, dim, n, g.q0, g.q1, m);
    return;
  }
  case SourceKind::XX: {
    // XX(theta) = exp(-i theta X(x)X): the pi/4 point makes the published
    // CX sequence an exact CNOT up to phase.
    const double ct = std::cos(g.angle);
    const Complex st(0, -std::sin(g.angle));
    const Complex m[16] = {ct, 0,  0,  st, 0,  ct, st, 0,
                           0,  st, ct, 0,  st, 0,  0,  ct};
    apply_two_qubit(u, dim, n, g.q0, g.q1, m);
    return;
  }
  case SourceKind::Swap: {
    const Complex m[16] = {1, 0, 0, 0, 0, 0, 1, 0,
                           0, 1, 0, 0, 0, 0, 0, 1};
    apply_two_qubit(u, dim, n, g.q0, g.q1, m);
    return;
  }
  case SourceKind::Barrier:
    return;
  }
}

} // namespace

int optimal_moves(const RoutedCircuit& routed, int tape_ions, int head_size,
                  const OracleBudget& budget) {
  if (tape_ions > budget.max_ions ||
      routed.circuit.gate_count() > budget.max_gates ||
      routed.circuit.gate_count() > 62) {
    throw OracleOverflow("optimal_moves instance exceeds the oracle budget");
  }
  MoveInstance inst = make_instance(routed, tape_ions, head_size);
  const std::uint64_t all =
      inst.gate_count == 0 ? 0 : (std::uint64_t{1} << inst.gate_count) - 1;
  if (all == 0) {
    return 0;
  }

  std::set<std::pair<int, std::uint64_t>> visited;
  std::deque<std::tuple<int, std::uint64_t, int>> queue; // position, done, moves
  long long states = 0;
  for (int p = 0; p < inst.positions; ++p) {
    std::uint64_t done = closure(inst, p, head_size, 0);
    if (done == all) {
      return 0;
    }
    if (visited.emplace(p, done).second) {
      queue.emplace_back(p, done, 0);
      ++states;
    }
  }
  while (!queue.empty()) {
    auto [p, done, moves] = queue.front();
    queue.pop_front();
    for (int p2 = 0; p2 < inst.positions; ++p2) {
      if (p2 == p) {
        continue;
      }
      std::uint64_t next = closure(inst, p2, head_size, done);
      if (next == all) {
        return moves + 1;
      }
      if (next == done) {
        continue;
      }
      if (visited.emplace(p2, next).second) {
        if (++states > budget.max_states) {
          throw OracleOverflow("optimal_moves exceeded the state budget");
        }
        queue.emplace_back(p2, next, moves + 1);
      }
    }
  }
  throw InternalError("optimal_moves search space exhausted without a goal");
}

ReplayResult replay_check(const Circuit& original, const RoutedCircuit& routed,
                          const Schedule& schedule) {
  const Circuit& c = routed.circuit;
  auto fail = [](std::string msg) {
    return ReplayResult{false, std::move(msg)};
  };
  if (static_cast<int>(routed.origin.size()) != c.gate_count()) {
    return fail("origin table size does not match the routed circuit");
  }

  Mapping m = routed.initial_mapping;
  std::vector<bool> executed(c.gate_count(), false);
  std::vector<bool> src_done(original.gate_count(), false);
  int src_seen = 0;
  int seen = 0;

  for (std::size_t si = 0; si < schedule.steps.size(); ++si) {
    const ScheduleStep& step = schedule.steps[si];
    const int p = step.head_position;
    if (p < 0 || p > schedule.tape_ions - schedule.head_size) {
      return fail("head position out of range at step " + std::to_string(si));
    }
    for (int gi : step.gates) {
      if (gi < 0 || gi >= c.gate_count()) {
        return fail("gate index out of range in step " + std::to_string(si));
      }
      if (executed[gi]) {
        return fail("gate " + std::to_string(gi) + " executed twice");
      }
      for (int pr : c.preds[gi]) {
        if (!executed[pr]) {
          return fail("dependency violation: gate " + std::to_string(gi) +
                      " ran before its predecessor " + std::to_string(pr));
        }
      }
      const NativeGate& g = c.gates[gi];
      for (int q : {g.q0, g.q1}) {
        if (q >= 0 && (q < p || q > p + schedule.head_size - 1)) {
          return fail("gate " + std::to_string(gi) +
                      " operates outside the head window at step " +
                      std::to_string(si));
        }
      }
      if (is_two_qubit(g.kind) &&
          std::abs(g.q0 - g.q1) > schedule.head_size - 1) {
        return fail("gate " + std::to_string(gi) +
                    " spans more than the head width");
      }
      int src = routed.origin[gi];
      if (src < 0) {
        m.swap_ions(g.q0, g.q1);
      } else {
        if (src >= original.gate_count()) {
          return fail("origin index out of range at routed gate " +
                      std::to_string(gi));
        }
        if (src_done[src]) {
          return fail("source gate " + std::to_string(src) +
                      " replayed twice");
        }
        // Batches may reorder independent gates; only the source DAG order
        // has to hold.
        for (int pr : original.preds[src]) {
          if (!src_done[pr]) {
            return fail("source dependency violation: gate " +
                        std::to_string(src) + " ran before gate " +
                        std::to_string(pr));
          }
        }
        src_done[src] = true;
        ++src_seen;
        const NativeGate& og = original.gates[src];
        if (og.kind != g.kind || og.angle != g.angle) {
          return fail("routed gate " + std::to_string(gi) +
                      " does not match its source gate");
        }
        // The routed operands must be the ions currently holding the
        // source gate's logical operands.
        if (og.q0 >= 0 && m.ion_of(og.q0) != g.q0) {
          return fail("routed gate " + std::to_string(gi) +
                      " touches the wrong ion for logical qubit " +
                      std::to_string(og.q0));
        }
        if (og.q1 >= 0 && m.ion_of(og.q1) != g.q1) {
          return fail("routed gate " + std::to_string(gi) +
                      " touches the wrong ion for logical qubit " +
                      std::to_string(og.q1));
        }
      }
      executed[gi] = true;
      ++seen;
    }
  }
  if (seen != c.gate_count()) {
    return fail("schedule executed " + std::to_string(seen) + " of " +
                std::to_string(c.gate_count()) + " gates");
  }
  if (src_seen != original.gate_count()) {
    return fail("schedule covered " + std::to_string(src_seen) + " of " +
                std::to_string(original.gate_count()) + " source gates");
  }
  if (!(m == routed.final_mapping)) {
    return fail("final mapping does not match the routed circuit");
  }
  return ReplayResult{};
}

std::vector<std::complex<double>>
circuit_unitary(const std::vector<SourceGate>& gates, int qubit_count) {
  if (qubit_count < 1 || qubit_count > 5) {
    throw OracleOverflow("circuit_unitary supports 1 to 5 qubits");
  }
  const int dim = 1 << qubit_count;
  Matrix u(static_cast<std::size_t>(dim) * dim, Complex(0, 0));
  for (int i = 0; i < dim; ++i) {
    u[static_cast<std::size_t>(i) * dim + i] = 1;
  }
  for (const SourceGate& g : gates) {
    apply_gate(u, dim, qubit_count, g);
  }
  return u;
}

bool unitary_equal(const std::vector<SourceGate>& a,
                   const std::vector<SourceGate>& b, int qubit_count,
                   const std::vector<int>& permutation, double tol) {
  Matrix ua = circuit_unitary(a, qubit_count);
  Matrix ub = circuit_unitary(b, qubit_count);
  const int dim = 1 << qubit_count;

  if (!permutation.empty()) {
    if (static_cast<int>(permutation.size()) != qubit_count) {
      throw ContractViolation("permutation size must match qubit count");
    }
    // Row-permute ua: content of wire x moves to wire permutation[x].
    Matrix permuted(ua.size());
    for (int row = 0; row < dim; ++row) {
      int target = 0;
      for (int q = 0; q < qubit_count; ++q) {
        int bit = (row >> (qubit_count - 1 - q)) & 1;
        target |= bit << (qubit_count - 1 - permutation[q]);
      }
      for (int col = 0; col < dim; ++col) {
        permuted[static_cast<std::size_t>(target) * dim + col] =
            ua[static_cast<std::size_t>(row) * dim + col];
      }
    }
    ua.swap(permuted);
  }

  // Global phase from the largest entry of ua.
  std::size_t ref = 0;
  double best = -1;
  for (std::size_t i = 0; i < ua.size(); ++i) {
    if (std::abs(ua[i]) > best) {
      best = std::abs(ua[i]);
      ref = i;
    }
  }
  if (best < tol || std::abs(ub[ref]) == 0.0) {
    return false;
  }
  Complex phase = ub[ref] / ua[ref];
  if (std::abs(std::abs(phase) - 1.0) > tol) {
    return false;
  }
  for (std::size_t i = 0; i < ua.size(); ++i) {
    if (std::abs(ua[i] * phase - ub[i]) > tol) {
      return false;
    }
  }
  return true;
}

} // namespace linq
