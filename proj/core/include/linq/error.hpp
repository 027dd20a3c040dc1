#pragma once

#include <stdexcept>
#include <string>

namespace linq {

/// Base class for all errors raised by the library. The CLI maps each
/// subclass to a distinct process exit code.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed program text, config file, or other user-supplied input.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, int line)
      : Error(msg + ", line " + std::to_string(line)), line_(line) {}
  explicit ParseError(const std::string& msg) : Error(msg), line_(0) {}
  int line() const { return line_; }

private:
  int line_;
};

/// The program does not fit the device (more qubits than tape slots).
class CapacityError : public Error {
public:
  using Error::Error;
};

/// A precondition of an operation was violated by the caller.
class ContractViolation : public Error {
public:
  using Error::Error;
};

/// Benchmark generator rejected its parameters.
class GeneratorError : public Error {
public:
  using Error::Error;
};

/// A brute-force oracle was asked for an instance beyond its search budget.
class OracleOverflow : public Error {
public:
  using Error::Error;
};

/// An internal invariant failed; indicates a bug, not bad input.
class InternalError : public Error {
public:
  using Error::Error;
};

} // namespace linq
