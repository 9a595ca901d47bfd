#pragma once

#include <stdexcept>
#include <string>

namespace curveclass {

enum class ErrorCode {
  InvalidArgument,
  NonPrimeCharacteristic,
  ReducibleModulus,
  ZeroPolynomial,
  SingularModel,
  GeometricallyReducible,
  UnsupportedModel,
  BudgetExceeded,
  OracleUnsupportedModel,
  UnsupportedCase,
  CharacteristicClash,
  InconsistentInput,
  NotFinite,
  NotInvertible,
  UnknownPoint,
  Internal,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace curveclass
