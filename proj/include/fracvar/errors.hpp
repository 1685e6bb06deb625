#pragma once

#include <stdexcept>
#include <string>

namespace fracvar {

// Base of every error raised by the library. NumericError marks failures of a
// computation on valid input (the CLI maps those to exit code 1).
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NumericError : public Error {
public:
  using Error::Error;
};

#define FRACVAR_DEFINE_ERROR(Name, Base)      \
  class Name : public Base {                  \
  public:                                     \
    using Base::Base;                         \
  };

FRACVAR_DEFINE_ERROR(PoleError, NumericError)
FRACVAR_DEFINE_ERROR(OverflowError, NumericError)
FRACVAR_DEFINE_ERROR(DomainError, Error)
FRACVAR_DEFINE_ERROR(GridTooCoarse, Error)
FRACVAR_DEFINE_ERROR(SingularEndpointError, NumericError)
FRACVAR_DEFINE_ERROR(OrderOutOfRange, Error)
FRACVAR_DEFINE_ERROR(NotRepresentable, Error)
FRACVAR_DEFINE_ERROR(BoundaryViolation, Error)
FRACVAR_DEFINE_ERROR(NonIntegrableError, NumericError)
FRACVAR_DEFINE_ERROR(StationarityViolation, NumericError)
FRACVAR_DEFINE_ERROR(NoBracket, NumericError)
FRACVAR_DEFINE_ERROR(NoConvergence, NumericError)
FRACVAR_DEFINE_ERROR(ValidityRegionError, Error)

#undef FRACVAR_DEFINE_ERROR

}  // namespace fracvar
