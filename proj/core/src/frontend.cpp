#include "linq/frontend.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "linq/error.hpp"

namespace linq {

const char* to_string(SourceKind kind) {
  switch (kind) {
  case SourceKind::H:
    return "h";
  case SourceKind::X:
    return "x";
  case SourceKind::Y:
    return "y";
  case SourceKind::Z:
    return "z";
  case SourceKind::CX:
    return "cx";
  case SourceKind::CZ:
    return "cz";
  case SourceKind::RX:
    return "rx";
  case SourceKind::RY:
    return "ry";
  case SourceKind::RZ:
    return "rz";
  case SourceKind::XX:
    return "xx";
  case SourceKind::Swap:
    return "swap";
  case SourceKind::Barrier:
    return "barrier";
  }
  return "?";
}

bool source_is_two_qubit(SourceKind kind) {
  switch (kind) {
  case SourceKind::CX:
  case SourceKind::CZ:
  case SourceKind::XX:
  case SourceKind::Swap:
    return true;
  default:
    return false;
  }
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) {
      ++pos;
    }
  }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
};

[[noreturn]] void fail(const Cursor& c, const std::string& msg) {
  throw ParseError(msg, c.line);
}

std::string_view take_identifier(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.pos;
  while (!c.done() && (std::isalnum(static_cast<unsigned char>(c.peek())) ||
                       c.peek() == '_')) {
    ++c.pos;
  }
  return c.text.substr(start, c.pos - start);
}

void expect(Cursor& c, char ch, const std::string& what) {
  c.skip_ws();
  if (c.done() || c.peek() != ch) {
    fail(c, "expected '" + std::string(1, ch) + "' in " + what);
  }
  ++c.pos;
}

int take_uint(Cursor& c, const std::string& what) {
  c.skip_ws();
  std::size_t start = c.pos;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    ++c.pos;
  }
  if (start == c.pos) {
    fail(c, "expected integer in " + what);
  }
  int value = 0;
  auto [ptr, ec] = std::from_chars(c.text.data() + start, c.text.data() + c.pos, value);
  if (ec != std::errc{}) {
    fail(c, "integer out of range in " + what);
  }
  return value;
}

double take_number(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.pos;
  if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
    ++c.pos;
  }
  bool digits = false;
  while (!c.done() && (std::isdigit(static_cast<unsigned char>(c.peek())) ||
                       c.peek() == '.')) {
    digits = digits || std::isdigit(static_cast<unsigned char>(c.peek()));
    ++c.pos;
  }
  if (!c.done() && (c.peek() == 'e' || c.peek() == 'E')) {
    ++c.pos;
    if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
      ++c.pos;
    }
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
      ++c.pos;
    }
  }
  if (!digits) {
    fail(c, "malformed angle");
  }
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(c.text.data() + start, c.text.data() + c.pos, value);
  if (ec != std::errc{} || ptr != c.text.data() + c.pos) {
    fail(c, "malformed angle");
  }
  return value;
}

// angle := ['-'|'+'] factor (('*'|'/') factor)*  with factor := 'pi' | number
double take_angle(Cursor& c) {
  c.skip_ws();
  double sign = 1.0;
  if (!c.done() && (c.peek() == '-' || c.peek() == '+')) {
    sign = c.peek() == '-' ? -1.0 : 1.0;
    ++c.pos;
  }
  auto factor = [&]() -> double {
    c.skip_ws();
    if (!c.done() && (c.peek() == 'p' || c.peek() == 'P')) {
      auto id = take_identifier(c);
      if (id != "pi" && id != "PI") {
        fail(c, "malformed angle");
      }
      return std::numbers::pi;
    }
    return take_number(c);
  };
  double value = factor();
  while (true) {
    c.skip_ws();
    if (c.done() || (c.peek() != '*' && c.peek() != '/')) {
      break;
    }
    char op = c.peek();
    ++c.pos;
    double rhs = factor();
    if (op == '*') {
      value *= rhs;
    } else {
      if (rhs == 0.0) {
        fail(c, "malformed angle");
      }
      value /= rhs;
    }
  }
  if (!std::isfinite(value)) {
    fail(c, "malformed angle");
  }
  return sign * value;
}

struct StatementSpec {
  SourceKind kind;
  bool has_angle;
  int operands;
};

bool lookup_statement(std::string_view name, StatementSpec& out) {
  struct Entry {
    std::string_view name;
    StatementSpec spec;
  };
  static constexpr std::array<Entry, 12> table{{
      {"h", {SourceKind::H, false, 1}},
      {"x", {SourceKind::X, false, 1}},
      {"y", {SourceKind::Y, false, 1}},
      {"z", {SourceKind::Z, false, 1}},
      {"rx", {SourceKind::RX, true, 1}},
      {"ry", {SourceKind::RY, true, 1}},
      {"rz", {SourceKind::RZ, true, 1}},
      {"cx", {SourceKind::CX, false, 2}},
      {"cz", {SourceKind::CZ, false, 2}},
      {"xx", {SourceKind::XX, true, 2}},
      {"swap", {SourceKind::Swap, false, 2}},
      {"barrier", {SourceKind::Barrier, false, 0}},
  }};
  for (const auto& e : table) {
    if (e.name == name) {
      out = e.spec;
      return true;
    }
  }
  return false;
}

int take_operand(Cursor& c, const ParsedProgram& prog) {
  auto reg = take_identifier(c);
  if (reg.empty()) {
    fail(c, "expected qubit operand");
  }
  if (reg != prog.register_name) {
    fail(c, "unknown register '" + std::string(reg) + "'");
  }
  expect(c, '[', "operand");
  int index = take_uint(c, "operand");
  expect(c, ']', "operand");
  if (index >= prog.qubit_count) {
    fail(c, "index out of range");
  }
  return index;
}

void parse_line(Cursor& c, ParsedProgram& prog) {
  c.skip_ws();
  if (c.done() || c.peek() == '\n' || c.peek() == '\r') {
    return; // blank line
  }
  auto name = take_identifier(c);
  if (name.empty()) {
    fail(c, "unknown statement");
  }
  if (name == "qreg") {
    if (prog.qubit_count > 0) {
      fail(c, "duplicate qreg");
    }
    auto reg = take_identifier(c);
    if (reg.empty()) {
      fail(c, "expected register name");
    }
    expect(c, '[', "qreg");
    int n = take_uint(c, "qreg");
    expect(c, ']', "qreg");
    if (n <= 0) {
      fail(c, "register size must be positive");
    }
    prog.register_name = std::string(reg);
    prog.qubit_count = n;
    return;
  }

  StatementSpec spec{};
  if (!lookup_statement(name, spec)) {
    fail(c, "unknown statement '" + std::string(name) + "'");
  }
  if (prog.qubit_count == 0 && spec.operands > 0) {
    fail(c, "qreg must be declared before gates");
  }
  SourceGate gate{spec.kind};
  if (spec.has_angle) {
    expect(c, '(', "gate angle");
    gate.angle = take_angle(c);
    expect(c, ')', "gate angle");
  }
  if (spec.operands >= 1) {
    gate.q0 = take_operand(c, prog);
  }
  if (spec.operands == 2) {
    expect(c, ',', "operands");
    gate.q1 = take_operand(c, prog);
    if (gate.q0 == gate.q1) {
      fail(c, "two-qubit gate operands must differ");
    }
  }
  prog.gates.push_back(gate);
}

} // namespace

ParsedProgram parse(std::string_view text) {
  ParsedProgram prog;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::size_t line_end = (eol == std::string_view::npos) ? text.size() : eol;
    std::string_view line = text.substr(pos, line_end - pos);
    ++line_no;
    if (auto comment = line.find("//"); comment != std::string_view::npos) {
      line = line.substr(0, comment);
    }
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t')) {
      line.remove_suffix(1);
    }
    // Statements are ';'-terminated; a line may carry several.
    std::size_t p = 0;
    while (p < line.size()) {
      while (p < line.size() && (line[p] == ' ' || line[p] == '\t')) {
        ++p;
      }
      if (p >= line.size()) {
        break;
      }
      std::size_t semi = line.find(';', p);
      if (semi == std::string_view::npos) {
        Cursor lc{line, p, line_no};
        fail(lc, "missing ';'");
      }
      Cursor stmt{line.substr(0, semi), p, line_no};
      parse_line(stmt, prog);
      stmt.skip_ws();
      if (!stmt.done()) {
        fail(stmt, "trailing characters after statement");
      }
      p = semi + 1;
    }
    if (eol == std::string_view::npos) {
      break;
    }
    pos = eol + 1;
  }
  if (prog.qubit_count == 0) {
    throw ParseError("missing qreg declaration", 1);
  }
  return prog;
}

namespace {

constexpr double kPi = std::numbers::pi;

void emit_h(std::vector<NativeGate>& out, int q) {
  out.push_back(NativeGate::rotation(GateKind::RY, kPi / 2, q));
  out.push_back(NativeGate::rotation(GateKind::RX, kPi, q));
}

void emit_cx(std::vector<NativeGate>& out, int c, int t) {
  out.push_back(NativeGate::rotation(GateKind::RY, kPi / 2, c));
  out.push_back(NativeGate::xx(kPi / 4, c, t));
  out.push_back(NativeGate::rotation(GateKind::RX, -kPi / 2, c));
  out.push_back(NativeGate::rotation(GateKind::RX, -kPi / 2, t));
  out.push_back(NativeGate::rotation(GateKind::RY, -kPi / 2, c));
}

} // namespace

Circuit decompose(const ParsedProgram& program) {
  std::vector<NativeGate> native;
  native.reserve(program.gates.size() * 2);
  for (const SourceGate& g : program.gates) {
    switch (g.kind) {
    case SourceKind::H:
      emit_h(native, g.q0);
      break;
    case SourceKind::X:
      native.push_back(NativeGate::rotation(GateKind::RX, kPi, g.q0));
      break;
    case SourceKind::Y:
      native.push_back(NativeGate::rotation(GateKind::RY, kPi, g.q0));
      break;
    case SourceKind::Z:
      native.push_back(NativeGate::rotation(GateKind::RZ, kPi, g.q0));
      break;
    case SourceKind::CX:
      emit_cx(native, g.q0, g.q1);
      break;
    case SourceKind::CZ:
      emit_h(native, g.q1);
      emit_cx(native, g.q0, g.q1);
      emit_h(native, g.q1);
      break;
    case SourceKind::RX:
      native.push_back(NativeGate::rotation(GateKind::RX, g.angle, g.q0));
      break;
    case SourceKind::RY:
      native.push_back(NativeGate::rotation(GateKind::RY, g.angle, g.q0));
      break;
    case SourceKind::RZ:
      native.push_back(NativeGate::rotation(GateKind::RZ, g.angle, g.q0));
      break;
    case SourceKind::XX:
      native.push_back(NativeGate::xx(g.angle, g.q0, g.q1));
      break;
    case SourceKind::Swap:
      native.push_back(NativeGate::swap(g.q0, g.q1));
      break;
    case SourceKind::Barrier:
      native.push_back(NativeGate::barrier());
      break;
    }
  }
  return build_dag(std::move(native), program.qubit_count);
}

std::vector<SourceGate> to_source_gates(const Circuit& circuit) {
  std::vector<SourceGate> out;
  out.reserve(circuit.gates.size());
  for (const NativeGate& g : circuit.gates) {
    SourceGate s{};
    switch (g.kind) {
    case GateKind::RX:
      s.kind = SourceKind::RX;
      break;
    case GateKind::RY:
      s.kind = SourceKind::RY;
      break;
    case GateKind::RZ:
      s.kind = SourceKind::RZ;
      break;
    case GateKind::XX:
      s.kind = SourceKind::XX;
      break;
    case GateKind::Swap:
      s.kind = SourceKind::Swap;
      break;
    case GateKind::Barrier:
      s.kind = SourceKind::Barrier;
      break;
    }
    s.angle = g.angle;
    s.q0 = g.q0;
    s.q1 = g.q1;
    out.push_back(s);
  }
  return out;
}

namespace {

std::string format_double(double v) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

} // namespace

std::string write_lqasm(const Circuit& circuit, const std::string& reg_name,
                        const std::vector<std::string>& header_comments) {
  std::ostringstream out;
  for (const auto& comment : header_comments) {
    out << "// " << comment << '\n';
  }
  out << "qreg " << reg_name << '[' << circuit.qubit_count << "];\n";
  for (const NativeGate& g : circuit.gates) {
    switch (g.kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ: {
      const char* name = g.kind == GateKind::RX   ? "rx"
                         : g.kind == GateKind::RY ? "ry"
                                                  : "rz";
      out << name << '(' << format_double(g.angle) << ") " << reg_name << '['
          << g.q0 << "];\n";
      break;
    }
    case GateKind::XX:
      out << "xx(" << format_double(g.angle) << ") " << reg_name << '[' << g.q0
          << "]," << reg_name << '[' << g.q1 << "];\n";
      break;
    case GateKind::Swap:
      out << "swap " << reg_name << '[' << g.q0 << "]," << reg_name << '['
          << g.q1 << "];\n";
      break;
    case GateKind::Barrier:
      out << "barrier;\n";
      break;
    }
  }
  return out.str();
}

} // namespace linq
