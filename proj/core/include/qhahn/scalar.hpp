#ifndef QHAHN_SCALAR_HPP
#define QHAHN_SCALAR_HPP

// Numeric domains used throughout: exact rationals (GMP mpq) for
// coefficient-level verification, plain doubles for ordinary floating
// work, and wide floats (GMP mpf) where coefficient assembly cancels
// more digits than a double carries.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace qhahn {

using Rational = mpq_class;
using BigFloat = mpf_class;

/// n*(n-1)/2, the q-exponent attached to index n in most series here.
constexpr long binom2(long n) { return n * (n - 1) / 2; }

// gmpxx expression templates make generic code brittle; these helpers
// always materialize a concrete value.

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.get_d(); }
inline double to_double(const BigFloat& x) { return x.get_d(); }

inline double abs_value(double x) { return x < 0 ? -x : x; }
inline Rational abs_value(const Rational& x) { return Rational(abs(x)); }
inline BigFloat abs_value(const BigFloat& x) { return BigFloat(abs(x)); }

inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const BigFloat& x) { return sgn(x) == 0; }

/// b^e for integer e of either sign. b must be nonzero when e < 0.
template <typename T>
T pow_int(const T& base, long exp) {
    if (exp < 0) {
        if (is_zero(base)) throw std::domain_error("pow_int: 0 raised to a negative power");
        T inv = T(1) / base;
        return pow_int(inv, -exp);
    }
    T acc(1);
    T b = base;
    unsigned long e = static_cast<unsigned long>(exp);
    while (e != 0) {
        if (e & 1) acc = T(acc * b);
        b = T(b * b);
        e >>= 1;
    }
    return acc;
}

/// Parses "p/q", "p", or a plain integer string into an exact rational.
/// Throws std::invalid_argument on malformed input or zero denominator.
inline Rational parse_rational(const std::string& text) {
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational literal: '" + text + "'");
    if (sgn(r.get_den()) == 0)
        throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& x) { return x.get_str(); }

template <typename T>
inline constexpr bool is_exact_scalar_v = std::is_same_v<T, Rational>;

}  // namespace qhahn

#endif  // QHAHN_SCALAR_HPP
