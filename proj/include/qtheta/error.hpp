#pragma once

#include <stdexcept>
#include <string>

namespace qtheta {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QTHETA_DEFINE_ERROR(Name)                                \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

QTHETA_DEFINE_ERROR(ZeroConstantTerm);
QTHETA_DEFINE_ERROR(OutOfPrecision);
QTHETA_DEFINE_ERROR(NonIntegralExponent);
QTHETA_DEFINE_ERROR(ParityMismatch);
QTHETA_DEFINE_ERROR(UnknownForm);
QTHETA_DEFINE_ERROR(UnknownSum);
QTHETA_DEFINE_ERROR(UnknownIdentity);
QTHETA_DEFINE_ERROR(PrecisionTooLow);
QTHETA_DEFINE_ERROR(UnsupportedK);

#undef QTHETA_DEFINE_ERROR

}  // namespace qtheta
