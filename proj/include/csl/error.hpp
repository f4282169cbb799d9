#pragma once

#include <stdexcept>
#include <string>

namespace csl {

/// Failure categories shared by the C++ core and the C API status codes.
enum class ErrorCode {
  InvalidArgument = 1,
  NotPrime,
  NotPrimePower,
  MismatchedField,
  DegreeMismatch,
  CapExceeded,
  OutOfRange,
  NotCyclic,
  Spherical,
  NotPrimitive,
  NoConvergence,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace csl
