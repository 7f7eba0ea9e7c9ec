#pragma once

#include <stdexcept>
#include <string>

namespace deqlens {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DuplicateEntryError : Error {
  using Error::Error;
};
struct IndexOutOfRangeError : Error {
  using Error::Error;
};
struct NotHermitianError : Error {
  using Error::Error;
};
struct NonFiniteValueError : Error {
  using Error::Error;
};
struct ComplexPowerUndefinedError : Error {
  using Error::Error;
};
struct POutOfRangeError : Error {
  using Error::Error;
};
struct ConjugateExponentMismatchError : Error {
  using Error::Error;
};
struct ConvergenceFailureError : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct NotSparseAccessError : Error {
  using Error::Error;
};

}  // namespace deqlens
