#include "colorlie/errors.hpp"

namespace colorlie {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::LinearlyDependent: return "LinearlyDependent";
    case ErrorKind::EmptySpace: return "EmptySpace";
    case ErrorKind::SingularForm: return "SingularForm";
    case ErrorKind::HintInvalid: return "HintInvalid";
    case ErrorKind::AutoSearchFailed: return "AutoSearchFailed";
    case ErrorKind::IrrationalEigenvalue: return "IrrationalEigenvalue";
    case ErrorKind::NonDiagonalizable: return "NonDiagonalizable";
    case ErrorKind::PairingDegenerate: return "PairingDegenerate";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::InconsistentRootSystem: return "InconsistentRootSystem";
    case ErrorKind::DegenerateOrder: return "DegenerateOrder";
    case ErrorKind::NotSelfCentralizing: return "NotSelfCentralizing";
    case ErrorKind::MultiDegreeRoot: return "MultiDegreeRoot";
    case ErrorKind::NonIntegralWeight: return "NonIntegralWeight";
    case ErrorKind::DecompositionIncomplete: return "DecompositionIncomplete";
    case ErrorKind::UngradedFirstFactor: return "UngradedFirstFactor";
    case ErrorKind::LatticeSolveFailed: return "LatticeSolveFailed";
  }
  return "Unknown";
}

DomainError::DomainError(ErrorKind kind, std::string operation, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + " in " + operation + ": " + detail),
      kind_(kind),
      operation_(std::move(operation)) {}

}  // namespace colorlie
