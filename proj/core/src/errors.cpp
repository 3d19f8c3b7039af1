#include "projrep/errors.hpp"

namespace projrep {

const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::PerpendicularRay: return "PerpendicularRay";
    case ErrorKind::JacobiViolation: return "JacobiViolation";
    case ErrorKind::LeibnizViolation: return "LeibnizViolation";
    case ErrorKind::NonPeriodicDerivation: return "NonPeriodicDerivation";
    case ErrorKind::NonAdmissible: return "NonAdmissible";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::OutsideUPsi: return "OutsideU_psi";
    case ErrorKind::ScalarMismatch: return "ScalarMismatch";
    case ErrorKind::PolarisationMismatch: return "PolarisationMismatch";
    case ErrorKind::ZeroLevel: return "ZeroLevel";
    case ErrorKind::NonIsometry: return "NonIsometry";
    case ErrorKind::UnitarityLoss: return "UnitarityLoss";
    case ErrorKind::EndpointMismatch: return "EndpointMismatch";
    case ErrorKind::MissingSittingInstants: return "MissingSittingInstants";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NonMonotone: return "NonMonotone";
    case ErrorKind::Schema: return "Schema";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

}  // namespace projrep
