#include "linq/pipeline.hpp"

#include "linq/error.hpp"

namespace linq {

CompileResult compile_program(std::string_view program_text,
                              const DeviceSpec& device) {
  device.validate();
  CompileResult result;
  result.source = parse(program_text);
  if (result.source.qubit_count > device.tape_ions) {
    throw CapacityError(
        "program needs " + std::to_string(result.source.qubit_count) +
        " qubits but the tape has " + std::to_string(device.tape_ions) +
        " ions");
  }
  result.native = decompose(result.source);
  result.routed = route(result.native, device.router);
  result.sched = schedule(result.routed, device.tape_ions, device.head_size);
  result.report = evaluate(result.sched, result.routed, device.noise);
  return result;
}

} // namespace linq
