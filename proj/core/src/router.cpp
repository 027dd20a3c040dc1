#include "linq/router.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <queue>

#include "linq/error.hpp"

namespace linq {

int RouterConfig::default_max_swap_len(int head_size) {
  return std::clamp(head_size - 2, 2, head_size);
}

void RouterConfig::validate() const {
  if (tape_ions < 2) {
    throw ContractViolation("tape_ions must be at least 2");
  }
  if (head_size < 2 || head_size > tape_ions) {
    throw ContractViolation("head_size must satisfy 2 <= L <= tape_ions");
  }
  // max_swap_len is allowed up to head_size: a swap is itself a two-qubit
  // gate and must fit under the head (span <= head_size - 1).
  if (max_swap_len < 2 || max_swap_len > head_size) {
    throw ContractViolation(
        "max_swap_len must satisfy 2 <= max_swap_len <= head_size");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ContractViolation("alpha must lie strictly between 0 and 1");
  }
  if (lookahead_window < 1) {
    throw ContractViolation("lookahead_window must be positive");
  }
}

namespace {

// Scores are compared after rounding to 12 significant digits so that the
// selection cannot depend on summation order.
double round_significant(double x, int digits = 12) {
  if (x == 0.0 || !std::isfinite(x)) {
    return x;
  }
  double scale = std::pow(10.0, digits - 1 - std::floor(std::log10(std::abs(x))));
  return std::round(x * scale) / scale;
}

struct InteractionGraph {
  int n = 0;
  // adjacency[u] = (v, weight), sorted by descending weight then ascending v
  std::vector<std::vector<std::pair<int, long long>>> adjacency;
  std::vector<long long> weighted_degree;
};

InteractionGraph interaction_graph(const Circuit& circuit) {
  InteractionGraph g;
  g.n = circuit.qubit_count;
  std::map<std::pair<int, int>, long long> weights;
  for (const NativeGate& gate : circuit.gates) {
    if (is_two_qubit(gate.kind)) {
      auto key = std::minmax(gate.q0, gate.q1);
      ++weights[{key.first, key.second}];
    }
  }
  g.adjacency.assign(g.n, {});
  g.weighted_degree.assign(g.n, 0);
  for (const auto& [pair, w] : weights) {
    g.adjacency[pair.first].emplace_back(pair.second, w);
    g.adjacency[pair.second].emplace_back(pair.first, w);
    g.weighted_degree[pair.first] += w;
    g.weighted_degree[pair.second] += w;
  }
  for (auto& adj : g.adjacency) {
    std::sort(adj.begin(), adj.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) {
        return a.second > b.second;
      }
      return a.first < b.first;
    });
  }
  return g;
}

// Weighted Cuthill-McKee order: start from the smallest-id vertex of minimum
// weighted degree, enqueue neighbors heaviest-edge first. Isolated vertices
// follow in id order.
std::vector<int> traversal_order(const InteractionGraph& g) {
  std::vector<int> order;
  order.reserve(g.n);
  std::vector<bool> seen(g.n, false);

  auto visit_component = [&](int start) {
    std::queue<int> queue;
    queue.push(start);
    seen[start] = true;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      order.push_back(u);
      for (const auto& [v, w] : g.adjacency[u]) {
        if (!seen[v]) {
          seen[v] = true;
          queue.push(v);
        }
      }
    }
  };

  while (true) {
    int start = -1;
    long long best_degree = std::numeric_limits<long long>::max();
    for (int v = 0; v < g.n; ++v) {
      if (!seen[v] && !g.adjacency[v].empty() &&
          g.weighted_degree[v] < best_degree) {
        best_degree = g.weighted_degree[v];
        start = v;
      }
    }
    if (start < 0) {
      break;
    }
    visit_component(start);
  }
  for (int v = 0; v < g.n; ++v) {
    if (!seen[v]) {
      order.push_back(v);
    }
  }
  return order;
}

long long placement_cost(const InteractionGraph& g,
                         const std::vector<int>& position) {
  long long cost = 0;
  for (int u = 0; u < g.n; ++u) {
    for (const auto& [v, w] : g.adjacency[u]) {
      if (u < v) {
        cost += w * std::abs(position[u] - position[v]);
      }
    }
  }
  return cost;
}

// Moves each qubit toward the weighted median of its neighbors when the swap
// strictly lowers the total weighted distance. Fixes hub-heavy graphs that a
// bare traversal places off-center; a path placed in order is already optimal
// and is left untouched.
void refine_placement(const InteractionGraph& g, std::vector<int>& position,
                      std::vector<int>& occupant) {
  auto cost_around = [&](int q) {
    long long c = 0;
    for (const auto& [v, w] : g.adjacency[q]) {
      c += w * std::abs(position[q] - position[v]);
    }
    return c;
  };

  const int max_passes = 8;
  for (int pass = 0; pass < max_passes; ++pass) {
    bool changed = false;
    for (int q = 0; q < g.n; ++q) {
      if (g.adjacency[q].empty()) {
        continue;
      }
      // Lower weighted median of neighbor positions.
      std::vector<std::pair<int, long long>> spots;
      long long total = 0;
      for (const auto& [v, w] : g.adjacency[q]) {
        spots.emplace_back(position[v], w);
        total += w;
      }
      std::sort(spots.begin(), spots.end());
      long long acc = 0;
      int target = spots.back().first;
      for (const auto& [p, w] : spots) {
        acc += 2 * w;
        if (acc >= total) {
          target = p;
          break;
        }
      }
      if (target == position[q]) {
        continue;
      }
      // The shared edge (q, other), if any, contributes equally before and
      // after, so comparing the two incident sums decides the global delta.
      int other = occupant[target];
      int old_pos = position[q];
      long long before = cost_around(q) + cost_around(other);
      position[q] = target;
      position[other] = old_pos;
      occupant[target] = q;
      occupant[old_pos] = other;
      long long after = cost_around(q) + cost_around(other);
      if (after >= before) { // strict improvement required
        position[q] = old_pos;
        position[other] = target;
        occupant[old_pos] = q;
        occupant[target] = other;
      } else {
        changed = true;
      }
    }
    if (!changed) {
      break;
    }
  }
}

} // namespace

Mapping initial_mapping(const Circuit& circuit, const RouterConfig& cfg) {
  cfg.validate();
  if (circuit.qubit_count > cfg.tape_ions) {
    throw CapacityError("circuit needs " + std::to_string(circuit.qubit_count) +
                        " qubits but the tape has " +
                        std::to_string(cfg.tape_ions) + " ions");
  }
  InteractionGraph g = interaction_graph(circuit);
  std::vector<int> order = traversal_order(g);

  std::vector<int> position(g.n);
  std::vector<int> occupant(g.n, -1);
  for (int slot = 0; slot < g.n; ++slot) {
    position[order[slot]] = slot;
    occupant[slot] = order[slot];
  }
  refine_placement(g, position, occupant);

  Mapping m;
  m.logical_to_ion = position;
  m.ion_to_logical.assign(cfg.tape_ions, -1);
  for (int q = 0; q < g.n; ++q) {
    m.ion_to_logical[position[q]] = q;
  }
  return m;
}

double score_mapping(const Mapping& mapping, const Circuit& circuit,
                     std::span<const int> remaining_gates,
                     const RouterConfig& cfg, int current_depth) {
  double score = 0.0;
  for (int idx : remaining_gates) {
    const NativeGate& g = circuit.gates[idx];
    if (!is_two_qubit(g.kind)) {
      continue;
    }
    // Depth deltas clamp at zero: a pending gate on an independent chain can
    // sit at a lower level than the gate being resolved, and alpha^negative
    // would outweigh the gate the router is actually fixing.
    int delta = std::max(0, circuit.depth[idx] - current_depth);
    score += gate_distance(g, mapping) * std::pow(cfg.alpha, delta);
  }
  return score;
}

namespace {

// Pending two-qubit gates from `first_gate` on, capped at the lookahead
// window for scoring purposes.
std::vector<int> lookahead_gates(const Circuit& circuit, int first_gate,
                                 int window) {
  std::vector<int> out;
  for (int i = first_gate;
       i < circuit.gate_count() && static_cast<int>(out.size()) < window; ++i) {
    if (is_two_qubit(circuit.gates[i].kind)) {
      out.push_back(i);
    }
  }
  return out;
}

// An applied swap is opposing when it strictly shortens two distinct pending
// gates, one holding an operand on each side of the swap. Only gates inside
// the router's lookahead window count: on dense interaction graphs almost any
// transposition shortens some far-future gate by accident, which would make
// the counter meaningless.
bool swap_is_opposing(int ion_a, int ion_b, const Circuit& circuit,
                      std::span<const int> pending, const Mapping& before) {
  auto distance_after = [&](int p, int q) {
    auto moved = [&](int ion) {
      return ion == ion_a ? ion_b : (ion == ion_b ? ion_a : ion);
    };
    return std::abs(moved(p) - moved(q));
  };
  bool shortened_at_a = false;
  bool shortened_at_b = false;
  for (int i : pending) {
    const NativeGate& g = circuit.gates[i];
    if (!is_two_qubit(g.kind)) {
      continue;
    }
    int p = before.ion_of(g.q0);
    int q = before.ion_of(g.q1);
    if (distance_after(p, q) >= std::abs(p - q)) {
      continue;
    }
    if (p == ion_a || q == ion_a) {
      shortened_at_a = true;
    }
    if (p == ion_b || q == ion_b) {
      shortened_at_b = true;
    }
    if (shortened_at_a && shortened_at_b) {
      return true;
    }
  }
  return false;
}

struct SwapCandidate {
  int ion_a = -1; // leftmost ion of the pair
  int ion_b = -1;
  double score = std::numeric_limits<double>::infinity();

  int length() const { return ion_b - ion_a; }

  bool better_than(const SwapCandidate& other) const {
    if (score != other.score) {
      return score < other.score;
    }
    if (ion_a != other.ion_a) {
      return ion_a < other.ion_a;
    }
    return length() < other.length();
  }
};

} // namespace

ResolveResult resolve_gate(int gate_index, const Circuit& circuit, Mapping& m,
                           const RouterConfig& cfg) {
  const NativeGate& gate = circuit.gates[gate_index];
  if (!is_two_qubit(gate.kind)) {
    throw ContractViolation("resolve_gate requires a two-qubit gate");
  }
  if (gate_distance(gate, m) < cfg.head_size) {
    throw ContractViolation("resolve_gate called on an executable gate");
  }

  std::vector<int> window =
      lookahead_gates(circuit, gate_index, cfg.lookahead_window);
  const int current_depth = circuit.depth[gate_index];

  ResolveResult result;
  // Every candidate moves an operand strictly inward, so the gate distance
  // drops by at least one per iteration.
  int guard = gate_distance(gate, m) + 2;
  while (gate_distance(gate, m) >= cfg.head_size) {
    if (--guard < 0) {
      throw InternalError("swap insertion failed to converge");
    }
    int a = m.ion_of(gate.q0);
    int b = m.ion_of(gate.q1);
    int lo = std::min(a, b);
    int hi = std::max(a, b);

    SwapCandidate best;
    auto consider = [&](int ion_x, int endpoint) {
      int span = std::abs(ion_x - endpoint);
      if (span < 1 || span > cfg.max_swap_len - 1) {
        return;
      }
      m.swap_ions(ion_x, endpoint);
      double s = round_significant(
          score_mapping(m, circuit, window, cfg, current_depth));
      m.swap_ions(ion_x, endpoint);
      SwapCandidate c{std::min(ion_x, endpoint), std::max(ion_x, endpoint), s};
      if (c.better_than(best)) {
        best = c;
      }
    };
    for (int x = lo + 1; x < hi; ++x) {
      consider(x, a);
      consider(x, b);
    }
    if (best.ion_a < 0) {
      throw InternalError("no swap candidate for unexecutable gate");
    }
    if (swap_is_opposing(best.ion_a, best.ion_b, circuit, window, m)) {
      ++result.opposing_count;
    }
    m.swap_ions(best.ion_a, best.ion_b);
    result.swaps.push_back(NativeGate::swap(best.ion_a, best.ion_b));
  }
  return result;
}

namespace {

RoutedCircuit route_impl(const Circuit& circuit, const RouterConfig& cfg,
                         bool baseline, const Mapping* custom_initial) {
  cfg.validate();
  Mapping m = custom_initial != nullptr ? *custom_initial
                                        : initial_mapping(circuit, cfg);

  RoutedCircuit routed;
  routed.initial_mapping = m;
  std::vector<NativeGate> physical;
  physical.reserve(circuit.gates.size());

  auto emit_swaps = [&](const std::vector<NativeGate>& swaps) {
    for (const NativeGate& s : swaps) {
      physical.push_back(s);
      routed.origin.push_back(-1);
    }
    routed.swap_count += static_cast<int>(swaps.size());
  };

  for (int i = 0; i < circuit.gate_count(); ++i) {
    const NativeGate& g = circuit.gates[i];
    if (is_two_qubit(g.kind) && gate_distance(g, m) >= cfg.head_size) {
      if (baseline) {
        // Hop the first operand toward the second in strides of exactly
        // head_size - 1 until the pair fits under the head.
        while (gate_distance(g, m) >= cfg.head_size) {
          int a = m.ion_of(g.q0);
          int b = m.ion_of(g.q1);
          int dir = b > a ? 1 : -1;
          int x = a + dir * (cfg.head_size - 1);
          if (swap_is_opposing(std::min(a, x), std::max(a, x), circuit, i, m)) {
            ++routed.opposing_swap_count;
          }
          m.swap_ions(a, x);
          emit_swaps({NativeGate::swap(std::min(a, x), std::max(a, x))});
        }
      } else {
        ResolveResult r = resolve_gate(i, circuit, m, cfg);
        routed.opposing_swap_count += r.opposing_count;
        emit_swaps(r.swaps);
      }
    }
    NativeGate mapped = g;
    if (mapped.q0 >= 0) {
      mapped.q0 = m.ion_of(g.q0);
    }
    if (mapped.q1 >= 0) {
      mapped.q1 = m.ion_of(g.q1);
    }
    physical.push_back(mapped);
    routed.origin.push_back(i);
  }

  routed.final_mapping = m;
  routed.circuit = build_dag(std::move(physical), cfg.tape_ions);
  return routed;
}

} // namespace

RoutedCircuit route(const Circuit& circuit, const RouterConfig& cfg) {
  return route_impl(circuit, cfg, false);
}

RoutedCircuit route_baseline(const Circuit& circuit, const RouterConfig& cfg) {
  RouterConfig baseline_cfg = cfg;
  // The reference router always swaps across the full head width.
  baseline_cfg.max_swap_len = cfg.head_size;
  return route_impl(circuit, baseline_cfg, true);
}

} // namespace linq
