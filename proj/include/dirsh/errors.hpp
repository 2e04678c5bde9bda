#pragma once

#include <stdexcept>
#include <string>

namespace dirsh {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed circuit or solution structure (cycles, bad operand indices).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Invalid argument or configuration value.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Unusable coupling graph (disconnected, duplicate edges, ...).
class TopologyError : public Error {
 public:
  using Error::Error;
};

/// Circuit needs more logical qubits than the machine provides.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Swap requested on two physical qubits that are not coupled.
class AdjacencyError : public Error {
 public:
  using Error::Error;
};

/// Input text could not be parsed. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what, bool unsupported = false)
      : Error("line " + std::to_string(line) + ": " + what),
        line_(line),
        unsupported_(unsupported) {}

  int line() const { return line_; }
  /// True when the construct is valid OpenQASM but outside the accepted subset.
  bool unsupported() const { return unsupported_; }

 private:
  int line_;
  bool unsupported_;
};

/// Invariant broken inside the library; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace dirsh
