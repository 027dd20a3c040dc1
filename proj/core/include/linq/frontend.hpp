#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "linq/circuit.hpp"

namespace linq {

/// Gate vocabulary of the `.lqasm` source format. The first block is
/// sugar that decompose() rewrites; the second block is already native.
enum class SourceKind { H, X, Y, Z, CX, CZ, RX, RY, RZ, XX, Swap, Barrier };

const char* to_string(SourceKind kind);
bool source_is_two_qubit(SourceKind kind);

struct SourceGate {
  SourceKind kind;
  double angle = 0.0;
  int q0 = -1;
  int q1 = -1;
};

struct ParsedProgram {
  int qubit_count = 0;
  std::string register_name;
  std::vector<SourceGate> gates;
};

/// Parses a line-oriented `.lqasm` program: one `;`-terminated statement per
/// line, `//` comments, `qreg q[N];` first. Angles are real literals or
/// pi-expressions such as `pi/4`, `-pi/2`, `3*pi/2`.
/// Throws ParseError carrying the 1-based line number.
ParsedProgram parse(std::string_view text);

/// Rewrites a parsed program into the native gate set and builds its DAG.
/// CX becomes RY(pi/2) c; XX(pi/4) c,t; RX(-pi/2) c; RX(-pi/2) t; RY(-pi/2) c.
/// CZ conjugates CX with H on the target; H/X/Y/Z become rotations.
Circuit decompose(const ParsedProgram& program);

/// Native gates viewed as source gates (for tools that consume either form).
std::vector<SourceGate> to_source_gates(const Circuit& circuit);

/// Serializes a native circuit back to `.lqasm` text.
std::string write_lqasm(const Circuit& circuit, const std::string& reg_name,
                        const std::vector<std::string>& header_comments = {});

} // namespace linq
