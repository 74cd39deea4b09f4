#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fxgy {

enum class ErrorCode {
  InvalidInput,
  DivisionByZero,
  ZeroLeadingCoefficient,
  ZeroPolynomial,
  ConstantPolynomial,
  ZeroDelta,
  NotCoprime,
  ConstraintViolated,
  FactorizationOverflow,
  BadModulusClass,
  DegenerateRoots,
  ZeroB,
  InvalidParameters,
  NoDecomposition,
  NotSimpleRooted,
  DegreeMismatch,
  SearchBoundExceeded,
  FundamentalSearchOverflow,
  OffCurve,
  OddMultiplicityViolation,
  SolutionSourceInvalid,
  MismatchedB,
  ShapeMismatch,
  NotOnCone,
  ResourceBoundExceeded,
  UnknownExampleId,
};

std::string_view error_name(ErrorCode code);

/// Resource-bound errors map to a distinct CLI exit code.
bool is_resource_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fxgy
