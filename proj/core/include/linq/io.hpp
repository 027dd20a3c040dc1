#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "linq/config.hpp"
#include "linq/noise.hpp"
#include "linq/router.hpp"
#include "linq/scheduler.hpp"

namespace linq {

/// Executable-code listing. Line grammar:
///   # tape_ions=<N> head_size=<L>
///   MOVE <p>
///   GATE <kind> <angle?> <ion...> ; m=<moves-so-far> tau=<us> f=<fidelity>
/// One MOVE line per step; the GATE lines that follow form its batch.
std::string write_schedule_text(const Schedule& schedule,
                                const RoutedCircuit& routed,
                                const FidelityReport& report);

/// Inverse of write_schedule_text: rebuilds the Schedule against the routed
/// circuit it was produced from. Gate lines are matched to dependency-ready
/// routed gates by kind, angle, and operands. Throws ParseError on malformed
/// text and ContractViolation when a line matches no ready gate.
Schedule read_schedule_text(std::string_view text, const RoutedCircuit& routed);

/// Full compile report as ordered JSON: resolved device spec plus metrics.
nlohmann::ordered_json report_json(const DeviceSpec& device,
                                   const RoutedCircuit& routed,
                                   const Schedule& schedule,
                                   const FidelityReport& report);

/// Writes via a temp file in the same directory plus rename, so readers never
/// observe a half-written artifact.
void atomic_write_file(const std::string& path, std::string_view content);

std::string read_file(const std::string& path);

} // namespace linq
