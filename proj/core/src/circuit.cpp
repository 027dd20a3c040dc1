#include "linq/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "linq/error.hpp"

namespace linq {

bool is_two_qubit(GateKind kind) {
  return kind == GateKind::XX || kind == GateKind::Swap;
}

bool is_rotation(GateKind kind) {
  return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

const char* to_string(GateKind kind) {
  switch (kind) {
  case GateKind::RX:
    return "RX";
  case GateKind::RY:
    return "RY";
  case GateKind::RZ:
    return "RZ";
  case GateKind::XX:
    return "XX";
  case GateKind::Swap:
    return "SWAP";
  case GateKind::Barrier:
    return "BARRIER";
  }
  return "?";
}

NativeGate NativeGate::rotation(GateKind kind, double angle, int q) {
  if (!is_rotation(kind)) {
    throw ContractViolation("rotation() requires RX, RY, or RZ");
  }
  return NativeGate{kind, angle, q, -1};
}

NativeGate NativeGate::xx(double angle, int a, int b) {
  return NativeGate{GateKind::XX, angle, a, b};
}

NativeGate NativeGate::swap(int a, int b) {
  return NativeGate{GateKind::Swap, 0.0, a, b};
}

NativeGate NativeGate::barrier() { return NativeGate{}; }

bool operator==(const NativeGate& a, const NativeGate& b) {
  return a.kind == b.kind && a.angle == b.angle && a.q0 == b.q0 && a.q1 == b.q1;
}

int Circuit::two_qubit_gate_count() const {
  int n = 0;
  for (const auto& g : gates) {
    if (is_two_qubit(g.kind)) {
      ++n;
    }
  }
  return n;
}

int Circuit::max_depth() const {
  int d = 0;
  for (int level : depth) {
    d = std::max(d, level);
  }
  return d;
}

Mapping Mapping::identity(int qubit_count, int tape_ions) {
  Mapping m;
  m.logical_to_ion.resize(qubit_count);
  m.ion_to_logical.assign(tape_ions, -1);
  for (int q = 0; q < qubit_count; ++q) {
    m.logical_to_ion[q] = q;
    m.ion_to_logical[q] = q;
  }
  return m;
}

void Mapping::swap_ions(int ion_a, int ion_b) {
  int la = ion_to_logical[ion_a];
  int lb = ion_to_logical[ion_b];
  std::swap(ion_to_logical[ion_a], ion_to_logical[ion_b]);
  if (la >= 0) {
    logical_to_ion[la] = ion_b;
  }
  if (lb >= 0) {
    logical_to_ion[lb] = ion_a;
  }
}

bool Mapping::is_consistent() const {
  for (std::size_t q = 0; q < logical_to_ion.size(); ++q) {
    int ion = logical_to_ion[q];
    if (ion < 0 || ion >= tape_ions() ||
        ion_to_logical[ion] != static_cast<int>(q)) {
      return false;
    }
  }
  int mapped = 0;
  for (int l : ion_to_logical) {
    if (l >= 0) {
      ++mapped;
    }
  }
  return mapped == static_cast<int>(logical_to_ion.size());
}

bool operator==(const Mapping& a, const Mapping& b) {
  return a.logical_to_ion == b.logical_to_ion &&
         a.ion_to_logical == b.ion_to_logical;
}

namespace {

void check_gate_operands(const NativeGate& g, int qubit_count) {
  switch (g.kind) {
  case GateKind::XX:
  case GateKind::Swap:
    if (g.operand_count() != 2 || g.q0 == g.q1) {
      throw ContractViolation("two-qubit gate needs two distinct operands");
    }
    break;
  case GateKind::RX:
  case GateKind::RY:
  case GateKind::RZ:
    if (g.operand_count() != 1) {
      throw ContractViolation("rotation needs exactly one operand");
    }
    if (!std::isfinite(g.angle)) {
      throw ContractViolation("rotation angle must be finite");
    }
    break;
  case GateKind::Barrier:
    if (g.operand_count() != 0) {
      throw ContractViolation("barrier takes no operands");
    }
    break;
  }
  for (int q : {g.q0, g.q1}) {
    if (q >= qubit_count) {
      throw ContractViolation("operand index out of range");
    }
  }
}

} // namespace

Circuit build_dag(std::vector<NativeGate> gates, int qubit_count) {
  Circuit c;
  c.qubit_count = qubit_count;
  c.gates = std::move(gates);
  const int n = c.gate_count();
  c.preds.assign(n, {});
  c.succs.assign(n, {});
  c.depth.assign(n, 1);

  // last_writer[q] = most recent gate touching qubit q; a barrier stands in
  // for all qubits at once.
  std::vector<int> last_writer(qubit_count, -1);
  int last_barrier = -1;

  // Targets arrive in increasing list order, so a duplicate edge can only
  // repeat the most recent one.
  auto add_edge = [&](int from, int to) {
    if (from < 0 || from == to) {
      return;
    }
    auto& s = c.succs[from];
    if (!s.empty() && s.back() == to) {
      return;
    }
    s.push_back(to);
    c.preds[to].push_back(from);
  };

  for (int i = 0; i < n; ++i) {
    const NativeGate& g = c.gates[i];
    check_gate_operands(g, qubit_count);
    if (g.kind == GateKind::Barrier) {
      for (int q = 0; q < qubit_count; ++q) {
        add_edge(last_writer[q], i);
        last_writer[q] = i;
      }
      add_edge(last_barrier, i);
      last_barrier = i;
    } else {
      add_edge(last_barrier, i);
      for (int q : {g.q0, g.q1}) {
        if (q >= 0) {
          add_edge(last_writer[q], i);
          last_writer[q] = i;
        }
      }
    }
    for (int p : c.preds[i]) {
      c.depth[i] = std::max(c.depth[i], c.depth[p] + 1);
    }
  }
  return c;
}

int gate_distance(const NativeGate& gate, const Mapping& mapping) {
  if (gate.operand_count() != 2) {
    throw ContractViolation("gate_distance requires a two-operand gate");
  }
  return std::abs(mapping.ion_of(gate.q0) - mapping.ion_of(gate.q1));
}

} // namespace linq
