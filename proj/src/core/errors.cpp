#include "errors.hpp"

namespace curveclass {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::SingularModel: return "SingularModel";
    case ErrorCode::GeometricallyReducible: return "GeometricallyReducible";
    case ErrorCode::UnsupportedModel: return "UnsupportedModel";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::OracleUnsupportedModel: return "OracleUnsupportedModel";
    case ErrorCode::UnsupportedCase: return "UnsupportedCase";
    case ErrorCode::CharacteristicClash: return "CharacteristicClash";
    case ErrorCode::InconsistentInput: return "InconsistentInput";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace curveclass
