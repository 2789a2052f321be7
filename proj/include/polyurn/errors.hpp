#pragma once

#include <stdexcept>
#include <string>

namespace polyurn {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mismatched matrix/vector shapes.
struct DimensionError : Error {
    using Error::Error;
};

// Mathematically invalid input (division by zero, zero polynomial, ...).
struct DomainError : Error {
    using Error::Error;
};

// A malformed urn specification (probabilities off, bad deltas, ...).
struct SpecError : Error {
    using Error::Error;
};

// A request exceeding a size cap that was not overridden.
struct CapError : Error {
    using Error::Error;
};

// An iterative numeric procedure failed to converge.
struct ConvergenceError : Error {
    using Error::Error;
};

// The requested method does not apply to this input (for example the
// dual-basis covariance route on a non-diagonalizable matrix).
struct MethodError : Error {
    using Error::Error;
};

}  // namespace polyurn
