#pragma once

#include <stdexcept>
#include <string>

namespace hodge {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input violates a structural precondition: malformed datum, index out of
// range, bad partition, unparsable fraction.
struct ValidationError : Error {
    using Error::Error;
};

// Operation applied on a space of the wrong dimension (wrong number of marked
// points, psi exponents of the wrong total degree).
struct DimensionError : Error {
    using Error::Error;
};

// Input is outside the supported case analysis (composite degree handed to
// the prime-degree formula, character without a localization relation).
struct UnsupportedError : Error {
    using Error::Error;
};

// Two independent evaluation routes disagreed. Always a bug, never user error.
struct CrossCheckError : Error {
    using Error::Error;
};

} // namespace hodge
