#pragma once

#include <stdexcept>
#include <string>

namespace vwq {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument / unsatisfied precondition (maps to CLI exit code 2).
struct DomainError : Error {
    using Error::Error;
};

// Requested monomial or product lies entirely at or past the truncation bound.
struct EmptyWindowError : DomainError {
    using DomainError::DomainError;
};

// Coefficient read at an exponent >= trunc: the value is unknown, never 0.
struct OutsideWindowError : DomainError {
    using DomainError::DomainError;
};

// A polynomial was truncated below the degree an integral needs.
struct InsufficientWindowError : DomainError {
    using DomainError::DomainError;
};

// invert() on a series that is zero within its window.
struct NotInvertibleError : Error {
    using Error::Error;
};

// sqrt() on a series with no representable square root (odd leading exponent
// on the current denominator lattice, or a leading coefficient that is not
// the square of a rational).
struct NoRootError : Error {
    using Error::Error;
};

// A theta-block coefficient failed to reduce to a rational number.  Carries
// the block index n and the offending q-exponent so the finding can be
// reported rather than swallowed.
struct IrrationalityError : Error {
    int block_n;
    long long exponent;
    IrrationalityError(int n, long long e)
        : Error("theta block n=" + std::to_string(n) +
                ": coefficient of q^" + std::to_string(e) + " is not rational"),
          block_n(n), exponent(e) {}
};

// Numerical evaluation requested below the accuracy floor (Im tau too small
// for the fixed term cutoff to honour its error contract).
struct AccuracyError : Error {
    using Error::Error;
};

} // namespace vwq
