#ifndef QHAHN_BIGFLOAT_HPP
#define QHAHN_BIGFLOAT_HPP

#include <qhahn/scalar.hpp>

namespace qhahn {

/// Bits of mantissa for BigFloat work. 448 bits (~134 decimal digits)
/// leaves ample headroom over the ~21 digits the Rogers coefficient
/// assembly cancels at t-order 8 (and ~51 at the worst sampled q).
inline constexpr int kBigFloatPrecisionBits = 448;

/// Sets the process-wide BigFloat default precision exactly once.
/// Call before constructing BigFloat values; idempotent and thread-safe.
void ensure_bigfloat_precision();

}  // namespace qhahn

#endif  // QHAHN_BIGFLOAT_HPP
