#pragma once

#include <stdexcept>
#include <string>

namespace projrep {

enum class ErrorKind {
  DimensionMismatch,
  InvalidArgument,
  PerpendicularRay,
  JacobiViolation,
  LeibnizViolation,
  NonPeriodicDerivation,
  NonAdmissible,
  NotACocycle,
  UnsupportedDegree,
  OutsideUPsi,
  ScalarMismatch,
  PolarisationMismatch,
  ZeroLevel,
  NonIsometry,
  UnitarityLoss,
  EndpointMismatch,
  MissingSittingInstants,
  SingularMatrix,
  NonMonotone,
  Schema,
};

const char* kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace projrep
