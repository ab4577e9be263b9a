#pragma once

#include <stdexcept>
#include <string>

namespace arithgeo {

// Base of everything the library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input violates an operation's precondition (bad discriminant, non-prime, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// The query is well-posed but the implemented criterion does not cover it
// (p = 2, p | disc, inert primes of k, even-valuation zeros of beta).
struct OutOfScopeError : Error {
    using Error::Error;
};

// A prime excluded from a prime set by convention was queried directly.
struct BoundaryPrimeError : OutOfScopeError {
    using OutOfScopeError::OutOfScopeError;
};

// A bounded search ran past its cap or ceiling without finding an answer.
struct SearchExhausted : Error {
    using Error::Error;
};

// Truncation bounds were too small for a procedure to produce any output.
struct BoundStarvation : Error {
    using Error::Error;
};

// An internal certificate did not hold. Indicates a bug, not a math failure.
struct VerificationFailure : Error {
    using Error::Error;
};

}  // namespace arithgeo
