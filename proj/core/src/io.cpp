#include "linq/io.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "linq/error.hpp"

namespace linq {

namespace {

std::string format_double(double v) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

bool gate_has_angle(GateKind kind) {
  return is_rotation(kind) || kind == GateKind::XX;
}

} // namespace

std::string write_schedule_text(const Schedule& schedule,
                                const RoutedCircuit& routed,
                                const FidelityReport& report) {
  const Circuit& c = routed.circuit;
  std::ostringstream out;
  out << "# tape_ions=" << schedule.tape_ions
      << " head_size=" << schedule.head_size << '\n';
  std::size_t trace_index = 0;
  for (const ScheduleStep& step : schedule.steps) {
    out << "MOVE " << step.head_position << '\n';
    for (int gi : step.gates) {
      if (trace_index >= report.per_gate.size() ||
          report.per_gate[trace_index].gate_index != gi) {
        throw InternalError("fidelity trace is out of step with the schedule");
      }
      const GateTrace& trace = report.per_gate[trace_index++];
      const NativeGate& g = c.gates[gi];
      out << "GATE " << to_string(g.kind);
      if (gate_has_angle(g.kind)) {
        out << ' ' << format_double(g.angle);
      }
      if (g.q0 >= 0) {
        out << ' ' << g.q0;
      }
      if (g.q1 >= 0) {
        out << ' ' << g.q1;
      }
      out << " ; m=" << trace.moves_before
          << " tau=" << format_double(trace.tau_us)
          << " f=" << format_double(trace.fidelity) << '\n';
    }
  }
  return out.str();
}

namespace {

struct GateLine {
  GateKind kind;
  double angle = 0.0;
  int q0 = -1;
  int q1 = -1;
};

GateKind kind_from_token(const std::string& token, int line) {
  for (GateKind k : {GateKind::RX, GateKind::RY, GateKind::RZ, GateKind::XX,
                     GateKind::Swap, GateKind::Barrier}) {
    if (token == to_string(k)) {
      return k;
    }
  }
  throw ParseError("unknown gate kind '" + token + "'", line);
}

double parse_double_token(const std::string& token, int line) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("malformed number '" + token + "'", line);
  }
  return v;
}

} // namespace

Schedule read_schedule_text(std::string_view text,
                            const RoutedCircuit& routed) {
  const Circuit& c = routed.circuit;
  Schedule sched;

  // Ready-front bookkeeping for matching gate lines to circuit gates.
  std::vector<int> blocked(c.gate_count(), 0);
  std::vector<bool> executed(c.gate_count(), false);
  std::set<int> ready;
  for (int i = 0; i < c.gate_count(); ++i) {
    blocked[i] = static_cast<int>(c.preds[i].size());
    if (blocked[i] == 0) {
      ready.insert(i);
    }
  }
  auto execute = [&](int i) {
    executed[i] = true;
    ready.erase(i);
    for (int s : c.succs[i]) {
      if (--blocked[s] == 0) {
        ready.insert(s);
      }
    }
  };

  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_step = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    if (line[0] == '#') {
      std::istringstream hs(line.substr(1));
      std::string field;
      while (hs >> field) {
        if (field.rfind("tape_ions=", 0) == 0) {
          sched.tape_ions = std::stoi(field.substr(10));
        } else if (field.rfind("head_size=", 0) == 0) {
          sched.head_size = std::stoi(field.substr(10));
        }
      }
      continue;
    }
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "MOVE") {
      int p = 0;
      if (!(ls >> p)) {
        throw ParseError("MOVE line needs a position", line_no);
      }
      if (have_step) {
        const int prev = sched.steps.back().head_position;
        if (prev != p) {
          ++sched.move_count;
          sched.move_distance_slots += std::abs(prev - p);
        }
      }
      sched.steps.push_back(ScheduleStep{p, {}});
      have_step = true;
    } else if (word == "GATE") {
      if (!have_step) {
        throw ParseError("GATE before any MOVE", line_no);
      }
      std::string kind_token;
      if (!(ls >> kind_token)) {
        throw ParseError("GATE line needs a kind", line_no);
      }
      GateLine gl;
      gl.kind = kind_from_token(kind_token, line_no);
      std::vector<std::string> tokens;
      std::string tok;
      while (ls >> tok && tok != ";") {
        tokens.push_back(tok);
      }
      std::size_t t = 0;
      if (gate_has_angle(gl.kind)) {
        if (t >= tokens.size()) {
          throw ParseError("missing angle", line_no);
        }
        gl.angle = parse_double_token(tokens[t++], line_no);
      }
      int operands = gl.kind == GateKind::Barrier
                         ? 0
                         : (is_two_qubit(gl.kind) ? 2 : 1);
      for (int k = 0; k < operands; ++k) {
        if (t >= tokens.size()) {
          throw ParseError("missing operand", line_no);
        }
        int ion = static_cast<int>(parse_double_token(tokens[t], line_no));
        ++t;
        (k == 0 ? gl.q0 : gl.q1) = ion;
      }
      if (t != tokens.size()) {
        throw ParseError("unexpected token '" + tokens[t] + "'", line_no);
      }

      // Match the smallest-index ready gate with identical kind, angle bits,
      // and operands. Identical ready gates are interchangeable.
      int match = -1;
      for (int i : ready) {
        const NativeGate& g = c.gates[i];
        if (g.kind == gl.kind && g.angle == gl.angle && g.q0 == gl.q0 &&
            g.q1 == gl.q1) {
          match = i;
          break;
        }
      }
      if (match < 0) {
        throw ContractViolation("schedule line " + std::to_string(line_no) +
                                " matches no dependency-ready gate");
      }
      execute(match);
      sched.steps.back().gates.push_back(match);
    } else {
      throw ParseError("unknown directive '" + word + "'", line_no);
    }
  }
  for (int i = 0; i < c.gate_count(); ++i) {
    if (!executed[i]) {
      throw ContractViolation("schedule text does not cover the full circuit");
    }
  }
  if (sched.tape_ions == 0) {
    throw ParseError("missing '# tape_ions=... head_size=...' header", 1);
  }
  return sched;
}

nlohmann::ordered_json report_json(const DeviceSpec& device,
                                   const RoutedCircuit& routed,
                                   const Schedule& schedule,
                                   const FidelityReport& report) {
  nlohmann::ordered_json j;
  j["device"]["tape_ions"] = device.tape_ions;
  j["device"]["head_size"] = device.head_size;
  j["router"]["max_swap_len"] = device.router.max_swap_len;
  j["router"]["alpha"] = device.router.alpha;
  j["router"]["lookahead_window"] = device.router.lookahead_window;
  j["noise"]["gamma"] = device.noise.gamma;
  j["noise"]["epsilon"] = device.noise.epsilon;
  j["noise"]["k0"] = device.noise.k0;
  j["noise"]["n_ref"] = device.noise.n_ref;
  j["noise"]["single_qubit_error"] = device.noise.single_qubit_error;
  j["noise"]["swap_cost_factor"] = device.noise.swap_cost_factor;
  j["noise"]["shuttle_rate_um_per_us"] = device.noise.shuttle_rate_um_per_us;
  j["noise"]["ion_spacing_um"] = device.noise.ion_spacing_um;
  j["noise"]["tau_1q_us"] = device.noise.tau_1q_us;

  j["metrics"]["native_gates"] = routed.circuit.gate_count();
  j["metrics"]["two_qubit_gates"] = routed.circuit.two_qubit_gate_count();
  j["metrics"]["swap_count"] = routed.swap_count;
  j["metrics"]["opposing_swap_count"] = routed.opposing_swap_count;
  j["metrics"]["opposing_ratio"] = routed.opposing_ratio();
  j["metrics"]["step_count"] = schedule.step_count();
  j["metrics"]["move_count"] = schedule.move_count;
  j["metrics"]["move_distance_slots"] = schedule.move_distance_slots;
  j["metrics"]["move_distance_um"] = report.move_distance_um;
  j["metrics"]["success_rate"] = report.success_rate;
  j["metrics"]["t_exec_s"] = report.t_exec_s;
  return j;
}

void atomic_write_file(const std::string& path, std::string_view content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error("cannot write '" + tmp + "'");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
      throw Error("short write to '" + tmp + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw Error("cannot rename '" + tmp + "' to '" + path + "': " +
                ec.message());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace linq
