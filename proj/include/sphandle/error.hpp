#pragma once

#include <stdexcept>
#include <string>

namespace sphandle {

// Failure categories surfaced by the library. The CLI maps these onto its
// exit-code contract (2 for malformed input / bad arguments, 1 for checks
// that ran and failed).
enum class ErrorKind {
  MalformedInput,    // table entry out of range, size mismatch, bad JSON
  InvalidSize,       // n = 0 quandle, zero starts
  OutOfDomain,       // r outside (0,pi) or on the excluded set
  TraceMismatch,     // trace(g) != 2 cos r beyond tolerance
  DegenerateLog,     // logarithm at +/-identity
  MixedRadius,       // operands on spheres of different radii
  MalformedPd,       // edge label multiplicity wrong, bad tuple arity
  OrientationError,  // edge labels do not trace a consistent orientation
  EmptyDiagram,      // empty PD text
  UnknownName,       // builtin lookup miss
  NotInRepSet,       // representation outside the fixed-trace class
  CorrespondenceViolation,
  AuditFailure,
  ConfigError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace sphandle
