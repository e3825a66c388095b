#ifndef QHAHN_QCONTEXT_HPP
#define QHAHN_QCONTEXT_HPP

#include <qhahn/errors.hpp>
#include <qhahn/scalar.hpp>

namespace qhahn {

enum class NumericMode { ExactRational, Float };

template <typename T>
inline constexpr NumericMode numeric_mode_v =
    is_exact_scalar_v<T> ? NumericMode::ExactRational : NumericMode::Float;

/// Immutable evaluation context: the base q, a default cap on series and
/// product truncation, and the target tail bound for infinite objects in
/// Float mode. All operations taking a QContext are pure.
template <typename T>
class QContext {
public:
    QContext(T q, int trunc_order = 256, double tail_tol = 1e-12)
        : q_(std::move(q)), trunc_order_(trunc_order), tail_tol_(tail_tol) {
        if (is_zero(q_) || !(abs_value(q_) < T(1)))
            throw DomainViolation("QContext: require 0 < |q| < 1");
        if (trunc_order_ < 1)
            throw DomainViolation("QContext: trunc_order must be >= 1");
        if (tail_tol_ < 0)
            throw DomainViolation("QContext: tail_tol must be >= 0");
        if (tail_tol_ == 0 && mode() != NumericMode::ExactRational)
            throw DomainViolation("QContext: tail_tol = 0 requires exact mode");
    }

    const T& q() const { return q_; }
    int trunc_order() const { return trunc_order_; }
    double tail_tol() const { return tail_tol_; }
    static constexpr NumericMode mode() { return numeric_mode_v<T>; }
    static constexpr bool is_exact() { return mode() == NumericMode::ExactRational; }

    /// q^e for integer e of either sign (q != 0 makes this total).
    T q_pow(long e) const { return pow_int(q_, e); }

private:
    T q_;
    int trunc_order_;
    double tail_tol_;
};

}  // namespace qhahn

#endif  // QHAHN_QCONTEXT_HPP
