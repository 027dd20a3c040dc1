#pragma once

#include <string_view>

#include "linq/config.hpp"
#include "linq/frontend.hpp"
#include "linq/noise.hpp"
#include "linq/router.hpp"
#include "linq/scheduler.hpp"

namespace linq {

/// Everything one compile produces, end to end.
struct CompileResult {
  ParsedProgram source;
  Circuit native;
  RoutedCircuit routed;
  Schedule sched;
  FidelityReport report;
};

/// parse -> decompose -> map -> route -> schedule -> evaluate.
CompileResult compile_program(std::string_view program_text,
                              const DeviceSpec& device);

} // namespace linq
