#pragma once

#include <string>
#include <vector>

namespace linq {

/// Gate set executable on the linear-tape hardware. Rotations take one
/// operand, XX and SWAP take two, BARRIER takes none and orders everything.
enum class GateKind { RX, RY, RZ, XX, Swap, Barrier };

bool is_two_qubit(GateKind kind);
bool is_rotation(GateKind kind);
const char* to_string(GateKind kind);

struct NativeGate {
  GateKind kind = GateKind::Barrier;
  double angle = 0.0; // radians; meaningful for rotations and XX only
  int q0 = -1;
  int q1 = -1;

  int operand_count() const { return q0 < 0 ? 0 : (q1 < 0 ? 1 : 2); }

  static NativeGate rotation(GateKind kind, double angle, int q);
  static NativeGate xx(double angle, int a, int b);
  static NativeGate swap(int a, int b);
  static NativeGate barrier();
};

bool operator==(const NativeGate& a, const NativeGate& b);

/// A program over native gates plus its dependency DAG. Two gates conflict
/// iff they share an operand (BARRIER conflicts with everything); edges run
/// between consecutive conflicting gates in list order. `depth` holds ASAP
/// levels: 1 + max over predecessors, 1 for sources.
struct Circuit {
  int qubit_count = 0;
  std::vector<NativeGate> gates;
  std::vector<std::vector<int>> preds;
  std::vector<std::vector<int>> succs;
  std::vector<int> depth;

  int gate_count() const { return static_cast<int>(gates.size()); }
  int two_qubit_gate_count() const;
  int max_depth() const;
};

/// Where each logical qubit sits on the tape. Total over logical qubits;
/// ions beyond the program ("spectators") carry no logical index (-1).
struct Mapping {
  std::vector<int> logical_to_ion;
  std::vector<int> ion_to_logical;

  static Mapping identity(int qubit_count, int tape_ions);

  int ion_of(int logical) const { return logical_to_ion[logical]; }
  int logical_at(int ion) const { return ion_to_logical[ion]; }
  int tape_ions() const { return static_cast<int>(ion_to_logical.size()); }

  /// Exchanges the contents of two tape slots (either may be a spectator).
  void swap_ions(int ion_a, int ion_b);

  bool is_consistent() const;
};

bool operator==(const Mapping& a, const Mapping& b);

/// Builds the dependency DAG and depth levels for a gate list.
/// Throws ContractViolation if any operand index is out of range.
Circuit build_dag(std::vector<NativeGate> gates, int qubit_count);

/// Distance in ion slots between the mapped operands of a two-qubit gate.
int gate_distance(const NativeGate& gate, const Mapping& mapping);

} // namespace linq
