#pragma once

#include <stdexcept>
#include <string>

namespace bsdsurf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad arguments to an operation (non-prime modulus, zero inputs, ...).
struct ArgumentError : Error {
    using Error::Error;
};

// Construction of the field tower failed (square discriminant,
// reducible defining polynomial, square-class mismatch).
struct TowerError : Error {
    using Error::Error;
};

struct NormalizeError : Error {
    using Error::Error;
};

struct GeometryError : Error {
    using Error::Error;
};

struct ValuationError : Error {
    using Error::Error;
};

// The rational prime divides the index [O_F : Z[w]]; the Dedekind
// factorization would be wrong, so we refuse instead of guessing.
struct UnsupportedPrime : Error {
    using Error::Error;
};

struct RamifiedPrime : Error {
    using Error::Error;
};

// A local invariant computation fell outside the cases the theorems
// cover (ramified place, shared divisor of theta and its conjugate).
struct UnsupportedLocalCase : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace bsdsurf
