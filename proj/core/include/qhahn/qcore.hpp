#ifndef QHAHN_QCORE_HPP
#define QHAHN_QCORE_HPP

// q-shifted factorials, q-binomial coefficients, and general basic
// hypergeometric series, over any of the supported numeric domains.
//
// Conventions:
//   (a;q)_0 = 1,  (a;q)_n = prod_{k=0}^{n-1} (1 - a q^k),
//   (a;q)_inf = prod_{k>=0} (1 - a q^k)  (|q| < 1),
//   [n,k]_q = (q;q)_n / ((q;q)_k (q;q)_{n-k}).
//
// A series_r_phi_s with parameter lists (a_1..a_r), (b_1..b_s) and
// argument z sums
//   sum_n [(-1)^n q^(n choose 2)]^(1+s-r)
//         (a_1..a_r;q)_n / (b_1..b_s;q)_n * z^n / (q;q)_n,
// the compensating factor being exactly 1 when r = s+1.

#include <qhahn/errors.hpp>
#include <qhahn/qcontext.hpp>
#include <qhahn/scalar.hpp>

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qhahn {

template <typename T>
T qpoch_finite(const T& a, int n, const QContext<T>& ctx) {
    T prod(1);
    T aq = a;
    for (int k = 0; k < n; ++k) {
        prod = T(prod * (T(1) - aq));
        aq = T(aq * ctx.q());
    }
    return prod;
}

template <typename T>
T qpoch_multi(std::span<const T> params, int n, const QContext<T>& ctx) {
    T prod(1);
    for (const T& a : params) prod = T(prod * qpoch_finite(a, n, ctx));
    return prod;
}

template <typename T>
T qpoch_multi(const std::vector<T>& params, int n, const QContext<T>& ctx) {
    return qpoch_multi(std::span<const T>(params), n, ctx);
}

/// [n,k]_q; zero outside 0 <= k <= n.
template <typename T>
T qbinomial(int n, int k, const QContext<T>& ctx) {
    if (k < 0 || k > n) return T(0);
    T num = qpoch_finite(ctx.q(), n, ctx);
    T den = T(qpoch_finite(ctx.q(), k, ctx) * qpoch_finite(ctx.q(), n - k, ctx));
    return T(num / den);
}

template <typename T>
struct InfiniteProduct {
    T value;
    double tail_bound;  // bound on |log| of the dropped tail
    int factors;
};

/// (a;q)_inf, truncated at the first K with |a| |q|^K / (1-|q|) < tail_tol.
/// Float-mode only; exact work goes through the fps module instead.
template <typename T>
InfiniteProduct<T> qpoch_infinite_full(const T& a, const QContext<T>& ctx) {
    if constexpr (is_exact_scalar_v<T>) {
        throw ModeError("qpoch_infinite: not defined in exact rational mode");
    } else {
        const double absq = to_double(abs_value(ctx.q()));
        double bound = to_double(abs_value(a)) / (1.0 - absq);
        int terms = 0;
        while (bound >= ctx.tail_tol()) {
            if (terms >= ctx.trunc_order())
                throw NonConvergent("qpoch_infinite: truncation cap " +
                                    std::to_string(ctx.trunc_order()) +
                                    " reached before tail bound was met");
            bound *= absq;
            ++terms;
        }
        T prod(1);
        T aq = a;
        for (int k = 0; k < terms; ++k) {
            prod = T(prod * (T(1) - aq));
            aq = T(aq * ctx.q());
        }
        return {std::move(prod), bound, terms};
    }
}

template <typename T>
T qpoch_infinite(const T& a, const QContext<T>& ctx) {
    return qpoch_infinite_full(a, ctx).value;
}

// ---------------------------------------------------------------------------
// Adaptive summation with a geometric tail estimate.
//
// Terms of every non-terminating series summed here eventually decay at a
// ratio <= kTailRatio (the term ratios tend to |q|, |z|, or a sampled value
// kept <= 0.9 by the verifiers). The loop stops once a window of recent
// |term| values certifies tail <= window_max * r/(1-r) < tol, and throws
// NonConvergent if the cap is reached first.
// ---------------------------------------------------------------------------

inline constexpr double kTailRatio = 0.9;

template <typename T>
struct SumResult {
    T value;
    double tail_bound;
    int terms;
};

template <typename T, typename TermAt>
SumResult<T> adaptive_sum(TermAt&& term_at, double tol, int cap, int min_terms = 4) {
    T acc(0);
    double window[3] = {0, 0, 0};
    const double tail_factor = kTailRatio / (1.0 - kTailRatio);
    for (int n = 0; n < cap; ++n) {
        T t = term_at(n);
        acc = T(acc + t);
        window[n % 3] = to_double(abs_value(t));
        if (n + 1 >= min_terms) {
            double wmax = window[0];
            if (window[1] > wmax) wmax = window[1];
            if (window[2] > wmax) wmax = window[2];
            double bound = wmax * tail_factor;
            if (bound < tol) return {std::move(acc), bound, n + 1};
        }
    }
    throw NonConvergent("adaptive_sum: cap " + std::to_string(cap) +
                        " reached before tail bound was met");
}

// ---------------------------------------------------------------------------
// Basic hypergeometric series
// ---------------------------------------------------------------------------

template <typename T>
struct PhiSpec {
    std::vector<T> upper;
    std::vector<T> lower;
    T argument;
};

/// Smallest m >= 0 with v == q^-m, if any. Exact test for rationals,
/// relative 1e-12 for floats (parameters are either sampled exactly or
/// computed as literal powers of q, so near-misses do not arise).
template <typename T>
std::optional<int> q_negative_power_index(const T& v, const QContext<T>& ctx) {
    if (is_zero(v)) return std::nullopt;
    T scaled = v;  // v * q^m
    for (int m = 0; ; ++m) {
        if constexpr (is_exact_scalar_v<T>) {
            if (scaled == T(1)) return m;
        } else {
            if (to_double(abs_value(T(scaled - T(1)))) <= 1e-12) return m;
        }
        if (abs_value(scaled) < T(1)) return std::nullopt;
        scaled = T(scaled * ctx.q());
    }
}

/// Terminating index: smallest m with some upper parameter equal to q^-m.
template <typename T>
std::optional<int> phi_terminating_index(const PhiSpec<T>& spec, const QContext<T>& ctx) {
    std::optional<int> best;
    for (const T& u : spec.upper) {
        if (auto m = q_negative_power_index(u, ctx))
            if (!best || *m < *best) best = m;
    }
    return best;
}

template <typename T>
void phi_validate_lower(const PhiSpec<T>& spec, const QContext<T>& ctx) {
    for (const T& b : spec.lower)
        if (q_negative_power_index(b, ctx))
            throw InvalidLowerParameter(
                "series_r_phi_s: a lower parameter equals q^-m, zeroing a "
                "denominator factor");
}

/// Sums the series. Terminating specs are summed exactly to the terminating
/// index (mode-independent); non-terminating specs are truncated under the
/// adaptive tail policy and require Float mode.
template <typename T>
T phi(const PhiSpec<T>& spec, const QContext<T>& ctx) {
    phi_validate_lower(spec, ctx);
    if (is_zero(spec.argument)) return T(1);

    const long d = 1 + static_cast<long>(spec.lower.size()) -
                   static_cast<long>(spec.upper.size());
    const auto n_term = phi_terminating_index(spec, ctx);

    // Running term; ratio from n to n+1 is
    //   [-q^n]^d * prod(1 - a_i q^n) / prod(1 - b_j q^n) * z / (1 - q^(n+1)).
    T term(1);
    T acc(0);
    T qn(1);  // q^n
    auto advance = [&](int n) {
        T ratio = pow_int(qn, d);
        if (d % 2 != 0) ratio = T(-ratio);
        for (const T& a : spec.upper) ratio = T(ratio * (T(1) - T(a * qn)));
        for (const T& b : spec.lower) ratio = T(ratio / (T(1) - T(b * qn)));
        ratio = T(ratio * spec.argument / (T(1) - T(qn * ctx.q())));
        term = T(term * ratio);
        qn = T(qn * ctx.q());
    };

    if (n_term) {
        for (int n = 0; n < *n_term; ++n) {
            acc = T(acc + term);
            advance(n);
        }
        return T(acc + term);
    }

    if constexpr (is_exact_scalar_v<T>) {
        throw ModeError("series_r_phi_s: non-terminating series cannot be "
                        "summed in exact rational mode");
    } else {
        auto result = adaptive_sum<T>(
            [&](int n) {
                if (n > 0) advance(n - 1);
                return term;
            },
            ctx.tail_tol(), ctx.trunc_order());
        return result.value;
    }
}

}  // namespace qhahn

#endif  // QHAHN_QCORE_HPP
