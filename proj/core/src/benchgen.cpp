#include "linq/benchgen.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cctype>
#include <sstream>
#include <vector>

#include "linq/error.hpp"
#include "linq/rng.hpp"

namespace linq {

namespace {

constexpr const char* kGeneratorVersion = "1";

const char* family_names[] = {"adder", "bv", "qaoa", "rcs", "qft", "longrange"};

std::string format_double(double v) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

class Emitter {
public:
  Emitter(const BenchmarkSpec& spec, int circuit_qubits) {
    out_ << "// family=" << to_string(spec.family) << " n=" << spec.qubit_count
         << " seed=" << spec.seed << " version=" << kGeneratorVersion << '\n';
    out_ << "qreg q[" << circuit_qubits << "];\n";
  }

  void gate1(const char* name, int q) {
    out_ << name << " q[" << q << "];\n";
  }
  void rot(const char* name, double angle, int q) {
    out_ << name << '(' << format_double(angle) << ") q[" << q << "];\n";
  }
  void gate2(const char* name, int a, int b) {
    out_ << name << " q[" << a << "],q[" << b << "];\n";
  }
  void xx(double angle, int a, int b) {
    out_ << "xx(" << format_double(angle) << ") q[" << a << "],q[" << b
         << "];\n";
  }
  void cx(int c, int t) { gate2("cx", c, t); }

  // controlled-phase macro: two CX plus frame rotations
  void cphase(double theta, int a, int b) {
    rot("rz", theta / 2, a);
    rot("rz", theta / 2, b);
    cx(a, b);
    rot("rz", -theta / 2, b);
    cx(a, b);
  }

  // Toffoli via the standard six-CX network; t_gate = pi/4 z-rotations.
  void toffoli(int a, int b, int t) {
    gate1("h", t);
    cx(b, t);
    rot("rz", -kQuarterPi, t);
    cx(a, t);
    rot("rz", kQuarterPi, t);
    cx(b, t);
    rot("rz", -kQuarterPi, t);
    cx(a, t);
    rot("rz", kQuarterPi, b);
    rot("rz", kQuarterPi, t);
    gate1("h", t);
    cx(a, b);
    rot("rz", kQuarterPi, a);
    rot("rz", -kQuarterPi, b);
    cx(a, b);
  }

  std::string str() const { return out_.str(); }

private:
  static constexpr double kQuarterPi = 0.7853981633974483;
  std::ostringstream out_;
};

// Ripple-carry adder on two k-bit registers with a k-slot carry register and
// one overflow qubit: 3k + 1 qubits. Qubits are interleaved c_i, a_i, b_i so
// every interaction spans at most three slots.
std::string gen_adder(const BenchmarkSpec& spec) {
  if (spec.qubit_count < 4 || spec.qubit_count % 3 != 1) {
    throw GeneratorError("adder needs qubit_count = 3k + 1 with k >= 1");
  }
  const int k = (spec.qubit_count - 1) / 3;
  auto c = [&](int i) { return 3 * i; };
  auto a = [&](int i) { return 3 * i + 1; };
  auto b = [&](int i) { return 3 * i + 2; };
  const int overflow = 3 * k;

  Emitter e(spec, spec.qubit_count);
  // Seeded basis-state inputs keep the netlist nontrivial without touching
  // the two-qubit structure.
  Rng rng(spec.seed);
  for (int i = 0; i < k; ++i) {
    if (rng.bernoulli(0.5)) {
      e.gate1("x", a(i));
    }
    if (rng.bernoulli(0.5)) {
      e.gate1("x", b(i));
    }
  }

  auto carry = [&](int ci, int ai, int bi, int co) {
    e.toffoli(ai, bi, co);
    e.cx(ai, bi);
    e.toffoli(ci, bi, co);
  };
  auto uncarry = [&](int ci, int ai, int bi, int co) {
    e.toffoli(ci, bi, co);
    e.cx(ai, bi);
    e.toffoli(ai, bi, co);
  };
  auto sum = [&](int ci, int ai, int bi) {
    e.cx(ai, bi);
    e.cx(ci, bi);
  };

  for (int i = 0; i < k - 1; ++i) {
    carry(c(i), a(i), b(i), c(i + 1));
  }
  carry(c(k - 1), a(k - 1), b(k - 1), overflow);
  e.cx(a(k - 1), b(k - 1));
  sum(c(k - 1), a(k - 1), b(k - 1));
  for (int i = k - 2; i >= 0; --i) {
    uncarry(c(i), a(i), b(i), c(i + 1));
    sum(c(i), a(i), b(i));
  }
  return e.str();
}

// Bernstein-Vazirani with an all-ones secret of qubit_count bits; the oracle
// ancilla is the last qubit.
std::string gen_bv(const BenchmarkSpec& spec) {
  if (spec.qubit_count < 1) {
    throw GeneratorError("bv needs at least 1 secret bit");
  }
  const int s = spec.qubit_count;
  const int anc = s;
  Emitter e(spec, s + 1);
  for (int i = 0; i < s; ++i) {
    e.gate1("h", i);
  }
  e.gate1("x", anc);
  e.gate1("h", anc);
  for (int i = 0; i < s; ++i) {
    e.cx(i, anc);
  }
  for (int i = 0; i < s; ++i) {
    e.gate1("h", i);
  }
  return e.str();
}

// MaxCut ansatz: ring graph by default, seeded Erdos-Renyi when
// qaoa_edge_probability > 0. Each ZZ term costs two CX.
std::string gen_qaoa(const BenchmarkSpec& spec) {
  if (spec.qubit_count < 2) {
    throw GeneratorError("qaoa needs at least 2 qubits");
  }
  if (spec.qaoa_layers < 1) {
    throw GeneratorError("qaoa needs at least 1 layer");
  }
  const int n = spec.qubit_count;
  Rng rng(spec.seed);

  std::vector<std::pair<int, int>> edges;
  if (spec.qaoa_edge_probability > 0.0) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng.bernoulli(spec.qaoa_edge_probability)) {
          edges.emplace_back(i, j);
        }
      }
    }
    if (edges.empty()) {
      throw GeneratorError("qaoa random graph came out empty; raise the edge "
                           "probability or change the seed");
    }
  } else {
    for (int i = 0; i < n; ++i) {
      edges.emplace_back(i, (i + 1) % n);
    }
  }

  Emitter e(spec, n);
  for (int i = 0; i < n; ++i) {
    e.gate1("h", i);
  }
  for (int layer = 0; layer < spec.qaoa_layers; ++layer) {
    double gamma = rng.uniform_real() * 3.141592653589793;
    double beta = rng.uniform_real() * 3.141592653589793;
    for (auto [u, v] : edges) {
      e.cx(u, v);
      e.rot("rz", 2 * gamma, v);
      e.cx(u, v);
    }
    for (int i = 0; i < n; ++i) {
      e.rot("rx", 2 * beta, i);
    }
  }
  return e.str();
}

// Random circuit sampling on a line: alternating random square-root
// rotations and brick-work layers of maximally entangling XX gates.
std::string gen_rcs(const BenchmarkSpec& spec) {
  if (spec.qubit_count < 2) {
    throw GeneratorError("rcs needs at least 2 qubits");
  }
  if (spec.rcs_layers < 1) {
    throw GeneratorError("rcs needs at least 1 layer");
  }
  const int n = spec.qubit_count;
  Rng rng(spec.seed);
  Emitter e(spec, n);
  for (int i = 0; i < n; ++i) {
    e.gate1("h", i);
  }
  static constexpr const char* axes[] = {"rx", "ry", "rz"};
  for (int layer = 0; layer < spec.rcs_layers; ++layer) {
    for (int i = 0; i < n; ++i) {
      e.rot(axes[rng.uniform_int(0, 2)], 1.5707963267948966, i);
    }
    for (int i = layer % 2; i + 1 < n; i += 2) {
      e.xx(0.7853981633974483, i, i + 1);
    }
  }
  return e.str();
}

std::string gen_qft(const BenchmarkSpec& spec) {
  if (spec.qubit_count < 2) {
    throw GeneratorError("qft needs at least 2 qubits");
  }
  const int n = spec.qubit_count;
  Emitter e(spec, n);
  for (int i = 0; i < n; ++i) {
    e.gate1("h", i);
    double theta = 3.141592653589793;
    for (int j = i + 1; j < n; ++j) {
      theta /= 2;
      e.cphase(theta, j, i);
    }
  }
  return e.str();
}

// Synthetic application with a seeded mix of short- and long-span CX gates;
// stands in for long-distance-heavy programs with no published netlist.
std::string gen_longrange(const BenchmarkSpec& spec) {
  if (spec.qubit_count < 8) {
    throw GeneratorError("longrange needs at least 8 qubits");
  }
  if (spec.longrange_gates_per_qubit < 1 ||
      spec.longrange_long_fraction < 0.0 ||
      spec.longrange_long_fraction > 1.0) {
    throw GeneratorError("longrange parameters out of range");
  }
  const int n = spec.qubit_count;
  const int gates = n * spec.longrange_gates_per_qubit;
  Rng rng(spec.seed);
  Emitter e(spec, n);
  for (int i = 0; i < n; ++i) {
    e.gate1("h", i);
  }
  for (int g = 0; g < gates; ++g) {
    int span;
    if (rng.bernoulli(spec.longrange_long_fraction)) {
      span = rng.uniform_int(n / 4, n - 1);
    } else {
      span = rng.uniform_int(1, 4);
    }
    int a = rng.uniform_int(0, n - 1 - span);
    e.cx(a, a + span);
  }
  return e.str();
}

} // namespace

const char* to_string(BenchFamily family) {
  return family_names[static_cast<int>(family)];
}

BenchFamily family_from_string(const std::string& name) {
  std::string lower = name;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  for (int i = 0; i < 6; ++i) {
    if (lower == family_names[i]) {
      return static_cast<BenchFamily>(i);
    }
  }
  throw GeneratorError("unknown benchmark family '" + name + "'");
}

std::string generate(const BenchmarkSpec& spec) {
  switch (spec.family) {
  case BenchFamily::Adder:
    return gen_adder(spec);
  case BenchFamily::BV:
    return gen_bv(spec);
  case BenchFamily::QAOA:
    return gen_qaoa(spec);
  case BenchFamily::RCS:
    return gen_rcs(spec);
  case BenchFamily::QFT:
    return gen_qft(spec);
  case BenchFamily::LongRange:
    return gen_longrange(spec);
  }
  throw GeneratorError("unknown benchmark family");
}

} // namespace linq
