#ifndef QHAHN_FPS_HPP
#define QHAHN_FPS_HPP

// Truncated formal power series in one variable t. This is the exact
// coefficient-wise oracle behind the generating-function verifiers: every
// "sum over n of (...) t^n" is realized as a finite prefix of its
// coefficient sequence.

#include <qhahn/errors.hpp>
#include <qhahn/qcontext.hpp>
#include <qhahn/qcore.hpp>
#include <qhahn/scalar.hpp>

#include <algorithm>
#include <cstddef>
#include <vector>

namespace qhahn {

template <typename T>
class TruncatedPowerSeries {
public:
    /// The zero series of the given truncation order (inclusive degree).
    explicit TruncatedPowerSeries(int order) : coeffs_(static_cast<size_t>(order) + 1, T(0)) {
        if (order < 0) throw DomainViolation("TruncatedPowerSeries: order must be >= 0");
    }

    static TruncatedPowerSeries constant(T value, int order) {
        TruncatedPowerSeries s(order);
        s.coeffs_[0] = std::move(value);
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const T& operator[](int k) const { return coeffs_[static_cast<size_t>(k)]; }
    T& operator[](int k) { return coeffs_[static_cast<size_t>(k)]; }
    const std::vector<T>& coeffs() const { return coeffs_; }

    // Arithmetic never extends the truncation order: results carry the
    // minimum of the operand orders.

    friend TruncatedPowerSeries operator+(const TruncatedPowerSeries& f,
                                          const TruncatedPowerSeries& g) {
        TruncatedPowerSeries out(std::min(f.order(), g.order()));
        for (int k = 0; k <= out.order(); ++k) out[k] = T(f[k] + g[k]);
        return out;
    }

    friend TruncatedPowerSeries operator-(const TruncatedPowerSeries& f,
                                          const TruncatedPowerSeries& g) {
        TruncatedPowerSeries out(std::min(f.order(), g.order()));
        for (int k = 0; k <= out.order(); ++k) out[k] = T(f[k] - g[k]);
        return out;
    }

    /// Cauchy product truncated at min(order_f, order_g).
    friend TruncatedPowerSeries operator*(const TruncatedPowerSeries& f,
                                          const TruncatedPowerSeries& g) {
        TruncatedPowerSeries out(std::min(f.order(), g.order()));
        for (int n = 0; n <= out.order(); ++n) {
            T acc(0);
            for (int i = 0; i <= n; ++i) acc = T(acc + T(f[i] * g[n - i]));
            out[n] = std::move(acc);
        }
        return out;
    }

    TruncatedPowerSeries& operator+=(const TruncatedPowerSeries& g) {
        *this = *this + g;
        return *this;
    }

    TruncatedPowerSeries scaled(const T& c) const {
        TruncatedPowerSeries out(order());
        for (int k = 0; k <= order(); ++k) out[k] = T(coeffs_[static_cast<size_t>(k)] * c);
        return out;
    }

    /// Multiplication by t^k at fixed order; the top k coefficients fall off.
    TruncatedPowerSeries shifted(int k) const {
        TruncatedPowerSeries out(order());
        for (int n = order(); n >= k; --n) out[n] = coeffs_[static_cast<size_t>(n - k)];
        return out;
    }

    /// Multiplicative inverse; requires an invertible constant term.
    TruncatedPowerSeries inverse() const {
        if (is_zero(coeffs_[0]))
            throw DomainViolation("TruncatedPowerSeries: inverse requires c0 != 0");
        TruncatedPowerSeries out(order());
        out[0] = T(T(1) / coeffs_[0]);
        for (int n = 1; n <= order(); ++n) {
            T acc(0);
            for (int i = 1; i <= n; ++i)
                acc = T(acc + T(coeffs_[static_cast<size_t>(i)] * out[n - i]));
            out[n] = T(T(-acc) / coeffs_[0]);
        }
        return out;
    }

    bool operator==(const TruncatedPowerSeries& other) const = default;

private:
    std::vector<T> coeffs_;
};

template <typename T>
using TPS = TruncatedPowerSeries<T>;

template <typename T>
TPS<T> fps_mul(const TPS<T>& f, const TPS<T>& g) {
    return f * g;
}

/// Horner evaluation of the truncated polynomial at t0.
template <typename T>
T fps_eval(const TPS<T>& f, const T& t0) {
    T acc = f[f.order()];
    for (int k = f.order() - 1; k >= 0; --k) acc = T(T(acc * t0) + f[k]);
    return acc;
}

/// 1/(1 - c t) up to order N.
template <typename T>
TPS<T> fps_geometric(const T& c, int N) {
    TPS<T> out(N);
    out[0] = T(1);
    for (int k = 1; k <= N; ++k) out[k] = T(out[k - 1] * c);
    return out;
}

/// (c t;q)_inf as a series: coeff_k = (-1)^k q^(k choose 2) c^k / (q;q)_k.
template <typename T>
TPS<T> fps_qprod_infinite(const T& c, int N, const QContext<T>& ctx) {
    TPS<T> out(N);
    out[0] = T(1);
    T qk(1);  // q^(k-1) when updating coefficient k
    for (int k = 1; k <= N; ++k) {
        out[k] = T(T(out[k - 1] * T(-T(qk * c))) / (T(1) - ctx.q_pow(k)));
        qk = T(qk * ctx.q());
    }
    return out;
}

/// 1/(c t;q)_inf as a series: coeff_k = c^k / (q;q)_k.
template <typename T>
TPS<T> fps_qprod_reciprocal(const T& c, int N, const QContext<T>& ctx) {
    TPS<T> out(N);
    out[0] = T(1);
    for (int k = 1; k <= N; ++k)
        out[k] = T(T(out[k - 1] * c) / (T(1) - ctx.q_pow(k)));
    return out;
}

/// (c t;q)_m as a polynomial, truncated at order N.
template <typename T>
TPS<T> fps_qpoch_poly(const T& c, int m, int N, const QContext<T>& ctx) {
    TPS<T> out = TPS<T>::constant(T(1), N);
    T cq = c;
    for (int j = 0; j < m; ++j) {
        for (int n = N; n >= 1; --n) out[n] = T(out[n] - T(cq * out[n - 1]));
        cq = T(cq * ctx.q());
    }
    return out;
}

/// 1/(c t;q)_m as a series, a product of m geometric factors.
template <typename T>
TPS<T> fps_qpoch_recip(const T& c, int m, int N, const QContext<T>& ctx) {
    TPS<T> out = TPS<T>::constant(T(1), N);
    T cq = c;
    for (int j = 0; j < m; ++j) {
        out = out * fps_geometric(cq, N);
        cq = T(cq * ctx.q());
    }
    return out;
}

/// The series_r_phi_s with argument c*t, expanded in t:
/// coeff_n = [(-1)^n q^(n choose 2)]^(1+s-r) *
///           (uppers;q)_n / (lowers;q)_n * c^n / (q;q)_n.
template <typename T>
TPS<T> fps_phi_in_t(const std::vector<T>& upper, const std::vector<T>& lower,
                    const T& c, int N, const QContext<T>& ctx) {
    for (const T& b : lower)
        if (q_negative_power_index(b, ctx))
            throw InvalidLowerParameter(
                "fps_phi_in_t: a lower parameter equals q^-m");
    const long d = 1 + static_cast<long>(lower.size()) -
                   static_cast<long>(upper.size());
    TPS<T> out(N);
    out[0] = T(1);
    T qn(1);  // q^n while producing coefficient n+1
    for (int n = 0; n < N; ++n) {
        T ratio = pow_int(qn, d);
        if (d % 2 != 0) ratio = T(-ratio);
        for (const T& a : upper) ratio = T(ratio * (T(1) - T(a * qn)));
        for (const T& b : lower) ratio = T(ratio / (T(1) - T(b * qn)));
        ratio = T(ratio * c / (T(1) - T(qn * ctx.q())));
        out[n + 1] = T(out[n] * ratio);
        qn = T(qn * ctx.q());
    }
    return out;
}

}  // namespace qhahn

#endif  // QHAHN_FPS_HPP
