#pragma once

#include <stdexcept>
#include <string>

namespace numsemi {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The input contained no values.
struct EmptyInputError : Error {
  EmptyInputError() : Error("empty generator list") {}
};

/// The gcd of the input values is greater than one, so they do not
/// generate a numerical semigroup.
struct NotCoprimeError : Error {
  explicit NotCoprimeError(long long g)
      : Error("generators are not coprime (gcd = " + std::to_string(g) + ")") {}
};

/// A precondition of glue() failed; the message names the violated one.
struct GluingPreconditionError : Error {
  using Error::Error;
};

/// The supplied ordering is not a permutation of the minimal generators.
struct NotAPermutationError : Error {
  NotAPermutationError() : Error("order is not a permutation of the minimal generators") {}
};

/// An argument is outside the range where the formula or operation is defined.
struct DomainError : Error {
  using Error::Error;
};

/// A Frobenius number below -1 was requested.
struct InvalidFrobeniusError : Error {
  explicit InvalidFrobeniusError(long long f)
      : Error("invalid Frobenius number " + std::to_string(f) + " (must be >= -1)") {}
};

/// The factorization count exceeded the configured oracle limit.
struct OracleTooLargeError : Error {
  using Error::Error;
};

/// A structural invariant failed. This indicates a bug in the library,
/// not bad input.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace numsemi
