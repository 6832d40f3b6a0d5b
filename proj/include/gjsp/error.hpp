#pragma once

#include <stdexcept>
#include <string>

namespace gjsp {

// Base of every error raised by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define GJSP_DECLARE_ERROR(Name)        \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  }

GJSP_DECLARE_ERROR(InvalidInstance);
GJSP_DECLARE_ERROR(CyclicPrecedence);
GJSP_DECLARE_ERROR(InfeasibleInput);
GJSP_DECLARE_ERROR(TooLarge);
GJSP_DECLARE_ERROR(UnknownCharacteristicValue);
GJSP_DECLARE_ERROR(ClassTooSmall);
GJSP_DECLARE_ERROR(NonFiniteFeature);
GJSP_DECLARE_ERROR(DimensionMismatch);
GJSP_DECLARE_ERROR(SchemaMismatch);
GJSP_DECLARE_ERROR(ParseError);

#undef GJSP_DECLARE_ERROR

}  // namespace gjsp
