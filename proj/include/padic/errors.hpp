#pragma once

#include <stdexcept>

namespace padic {

/// Base class of every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed construction parameters: composite prime, reducible modulus,
/// non-positive precision, bad policy bounds.
struct InvalidArgument : Error {
    using Error::Error;
};

/// The stored precision is too low to decide the question asked
/// (valuation of a value that is zero to its precision, its residue, ...).
struct IndeterminateError : Error {
    using Error::Error;
};

/// The input is outside the certified domain of the requested function.
struct DomainError : Error {
    using Error::Error;
};

}  // namespace padic
