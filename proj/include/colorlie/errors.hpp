#pragma once

#include <stdexcept>
#include <string>

namespace colorlie {

/// Failure categories raised by the algebraic routines. Each one names a
/// mathematical obstruction, not a programming error.
enum class ErrorKind {
  DimensionMismatch,
  InvalidArgument,
  NotClosed,
  NotHomogeneous,
  LinearlyDependent,
  EmptySpace,
  SingularForm,
  HintInvalid,
  AutoSearchFailed,
  IrrationalEigenvalue,
  NonDiagonalizable,
  PairingDegenerate,
  PreconditionFailed,
  InconsistentRootSystem,
  DegenerateOrder,
  NotSelfCentralizing,
  MultiDegreeRoot,
  NonIntegralWeight,
  DecompositionIncomplete,
  UngradedFirstFactor,
  LatticeSolveFailed,
};

const char* to_string(ErrorKind kind);

/// Raised by any operation whose inputs violate a mathematical precondition
/// or whose output fails an internal certificate. `operation` names the
/// failing routine, `what()` carries the witness.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorKind kind, std::string operation, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& operation() const noexcept { return operation_; }

 private:
  ErrorKind kind_;
  std::string operation_;
};

/// Malformed input documents (JSON schema violations, bad rational strings).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace colorlie
