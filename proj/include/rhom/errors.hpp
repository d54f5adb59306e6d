#pragma once

#include <stdexcept>
#include <string>

namespace rhom {

/// Base of every error raised by the library. Subclasses name the failed
/// contract; the message carries the offending data.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define RHOM_DEFINE_ERROR(Name)              \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

// exactla
RHOM_DEFINE_ERROR(NotASubspace);
RHOM_DEFINE_ERROR(NotNilpotent);
RHOM_DEFINE_ERROR(SpecializationMismatch);
// gca
RHOM_DEFINE_ERROR(CutoffExceeded);
RHOM_DEFINE_ERROR(MixedAlgebras);
RHOM_DEFINE_ERROR(DifferentialNotSquareZero);
RHOM_DEFINE_ERROR(NotAChainMap);
RHOM_DEFINE_ERROR(NotACocycle);
// liealg
RHOM_DEFINE_ERROR(NotAnIdeal);
RHOM_DEFINE_ERROR(NotDiagonal);
RHOM_DEFINE_ERROR(NotADerivation);
RHOM_DEFINE_ERROR(ValidationError);
// mostow
RHOM_DEFINE_ERROR(NotTriangular);
RHOM_DEFINE_ERROR(NotRational);
// sullivan
RHOM_DEFINE_ERROR(NotConnected);
RHOM_DEFINE_ERROR(H1NotZero);
RHOM_DEFINE_ERROR(NonFreeInput);
RHOM_DEFINE_ERROR(InsufficientCutoff);
RHOM_DEFINE_ERROR(UnsettledDegree);
// cli
RHOM_DEFINE_ERROR(ParseError);

#undef RHOM_DEFINE_ERROR

}  // namespace rhom
