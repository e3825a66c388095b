#ifndef QHAHN_ERRORS_HPP
#define QHAHN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qhahn {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A truncation cap was reached before the tail bound was met.
struct NonConvergent : Error {
    using Error::Error;
};

/// A lower parameter of a basic hypergeometric series equals q^-m,
/// which zeroes a denominator factor (b;q)_n.
struct InvalidLowerParameter : Error {
    using Error::Error;
};

/// The divided-difference denominator q^-1 x - y is (numerically) zero.
struct SingularPoint : Error {
    using Error::Error;
};

/// A parameter point violates an identity's declared constraints
/// (convergence domain or a degenerate configuration).
struct DomainViolation : Error {
    using Error::Error;
};

/// The operation is not defined in the active numeric mode
/// (e.g. an infinite product requested under exact rationals).
struct ModeError : Error {
    using Error::Error;
};

}  // namespace qhahn

#endif  // QHAHN_ERRORS_HPP
