#include "fxgy/error.hpp"

namespace fxgy {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorCode::ZeroDelta: return "ZeroDelta";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::FactorizationOverflow: return "FactorizationOverflow";
    case ErrorCode::BadModulusClass: return "BadModulusClass";
    case ErrorCode::DegenerateRoots: return "DegenerateRoots";
    case ErrorCode::ZeroB: return "ZeroB";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::NoDecomposition: return "NoDecomposition";
    case ErrorCode::NotSimpleRooted: return "NotSimpleRooted";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::SearchBoundExceeded: return "SearchBoundExceeded";
    case ErrorCode::FundamentalSearchOverflow: return "FundamentalSearchOverflow";
    case ErrorCode::OffCurve: return "OffCurve";
    case ErrorCode::OddMultiplicityViolation: return "OddMultiplicityViolation";
    case ErrorCode::SolutionSourceInvalid: return "SolutionSourceInvalid";
    case ErrorCode::MismatchedB: return "MismatchedB";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotOnCone: return "NotOnCone";
    case ErrorCode::ResourceBoundExceeded: return "ResourceBoundExceeded";
    case ErrorCode::UnknownExampleId: return "UnknownExampleId";
  }
  return "Unknown";
}

bool is_resource_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::FactorizationOverflow:
    case ErrorCode::SearchBoundExceeded:
    case ErrorCode::FundamentalSearchOverflow:
    case ErrorCode::ResourceBoundExceeded:
      return true;
    default:
      return false;
  }
}

}  // namespace fxgy
