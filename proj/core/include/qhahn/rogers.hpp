#ifndef QHAHN_ROGERS_HPP
#define QHAHN_ROGERS_HPP

// Rogers-type double and triple generating functions.
//
// These two identities hold as formal power series but NOT as pointwise
// numerical equalities: the right-hand sides' k-sums arise from a
// conditionally convergent rearrangement (each k-term carries a factor
// 1/(s q/t;q)_k whose poles t = s q^(m+1) accumulate at t = 0), so summing
// the printed terms at a fixed t converges to a different function.
// Accordingly:
//
//   Rogers          - s fixed numerically, both sides expanded in t and
//                     compared coefficient-wise.
//   extended Rogers - omega fixed numerically, both sides expanded as a
//                     bivariate series in (t, s); the RHS coefficient of
//                     t^n s^m is the Rogers RHS t-coefficient at index
//                     n+m divided by (q;q)_m.
//
// The RHS coefficient assembly cancels intermediates far larger than the
// result (about 13 orders of magnitude at t-order 8), so the comparison
// runs in wide floats (BigFloat); the cap on useful order comes from the
// working precision, not from double rounding.

#include <qhahn/bigfloat.hpp>
#include <qhahn/fps.hpp>
#include <qhahn/identities.hpp>
#include <qhahn/parameter_point.hpp>
#include <qhahn/polynomials.hpp>
#include <qhahn/qcontext.hpp>
#include <qhahn/qcore.hpp>

#include <utility>
#include <vector>

namespace qhahn {

/// Working context for the wide-float expansions.
inline QContext<BigFloat> make_bigfloat_context(const Rational& q) {
    ensure_bigfloat_precision();
    return QContext<BigFloat>(BigFloat(q), 4096, 1e-45);
}

/// Incrementally extended cache of S_N = Psi_N * (-1)^N q^(N choose 2).
template <typename T>
class PsiWeightedCache {
public:
    PsiWeightedCache(T a, T x, T y, T z, const QContext<T>& ctx)
        : a_(std::move(a)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)),
          ctx_(ctx) {}

    const T& operator()(int n) {
        while (static_cast<int>(values_.size()) <= n)
            values_.push_back(psi_weighted(static_cast<int>(values_.size()), a_,
                                           x_, y_, z_, ctx_));
        return values_[static_cast<size_t>(n)];
    }

private:
    T a_, x_, y_, z_;
    QContext<T> ctx_;
    std::vector<T> values_;
};

/// LHS t-coefficients: coeff_n = sum_m S_{n+m} s^m / ((q;q)_n (q;q)_m),
/// the m-sum truncated under the adaptive tail policy.
inline std::vector<BigFloat> rogers_lhs_series(PsiWeightedCache<BigFloat>& S,
                                               const BigFloat& s, int order,
                                               const QContext<BigFloat>& ctx) {
    std::vector<BigFloat> out;
    out.reserve(static_cast<size_t>(order) + 1);
    BigFloat qq_n(1);
    for (int n = 0; n <= order; ++n) {
        if (n > 0) qq_n = BigFloat(qq_n * (BigFloat(1) - ctx.q_pow(n)));
        BigFloat w(1);  // s^m / (q;q)_m
        BigFloat qm(1);
        auto inner = adaptive_sum<BigFloat>(
            [&](int m) {
                if (m > 0) {
                    w = BigFloat(w * s / (BigFloat(1) - BigFloat(qm * ctx.q())));
                    qm = BigFloat(qm * ctx.q());
                }
                return BigFloat(w * S(n + m));
            },
            ctx.tail_tol(), ctx.trunc_order());
        out.push_back(BigFloat(inner.value / qq_n));
    }
    return out;
}

/// Which right-hand-side expansion to build for the a = 0 specialization.
enum class RogersRhsForm {
    Phi11,          // the general form with the 1phi1(a;0;q, z s q^k) factor
    Phi43,          // a = 0 corollary, upper parameter ys
    Phi43AsPrinted  // a = 0 corollary with the (refuted) upper parameter yt
};

/// RHS t-coefficients of the Rogers formula with s fixed:
///   (xs;q)_inf/(ys;q)_inf * [1/(t/s;q)_inf]
///     * sum_k (ys;q)_k q^k/((xs;q)_k (q;q)_k) phi_k * [1/(s q/t;q)_k],
/// with 1/(s q/t;q)_k expanded in t as
///   (-t/s)^k q^(-(k choose 2)-k) * prod_{j=1..k} 1/(1 - t q^-j / s).
inline std::vector<BigFloat> rogers_rhs_series(
    const BigFloat& a, const BigFloat& x, const BigFloat& y, const BigFloat& z,
    const BigFloat& s, int order, const QContext<BigFloat>& ctx,
    RogersRhsForm form = RogersRhsForm::Phi11) {
    if (is_zero(s)) throw DomainViolation("rogers: requires s != 0");

    BigFloat kern = BigFloat(qpoch_infinite(BigFloat(x * s), ctx) /
                             qpoch_infinite(BigFloat(y * s), ctx));
    if (form != RogersRhsForm::Phi11)
        kern = BigFloat(kern * qpoch_infinite(BigFloat(z * s), ctx));

    // 1/(t/s;q)_inf as a t-series.
    TPS<BigFloat> euler_recip = fps_qprod_reciprocal(BigFloat(BigFloat(1) / s),
                                                     order, ctx);

    TPS<BigFloat> acc(order);
    BigFloat inv_s = BigFloat(BigFloat(1) / s);
    for (int k = 0; k <= order; ++k) {
        // Scalar (or low-degree polynomial) part of the k-th term.
        TPS<BigFloat> weight(order);
        BigFloat base = BigFloat(qpoch_finite(BigFloat(y * s), k, ctx) *
                                 ctx.q_pow(k) /
                                 (qpoch_finite(BigFloat(x * s), k, ctx) *
                                  qpoch_finite(ctx.q(), k, ctx)));
        switch (form) {
            case RogersRhsForm::Phi11:
                weight[0] = BigFloat(
                    base * phi(PhiSpec<BigFloat>{{a},
                                                 {BigFloat(0)},
                                                 BigFloat(z * s * ctx.q_pow(k))},
                               ctx));
                break;
            case RogersRhsForm::Phi43:
                weight[0] = BigFloat(base / qpoch_finite(BigFloat(z * s), k, ctx));
                break;
            case RogersRhsForm::Phi43AsPrinted: {
                // (yt;q)_k replaces (ys;q)_k, making the weight a polynomial.
                BigFloat scalar = BigFloat(
                    ctx.q_pow(k) / (qpoch_finite(BigFloat(x * s), k, ctx) *
                                    qpoch_finite(BigFloat(z * s), k, ctx) *
                                    qpoch_finite(ctx.q(), k, ctx)));
                weight = fps_qpoch_poly(y, k, order, ctx).scaled(scalar);
                break;
            }
        }

        // t-series of 1/(s q/t;q)_k.
        TPS<BigFloat> recip = TPS<BigFloat>::constant(BigFloat(1), order);
        BigFloat qj(1);
        for (int j = 1; j <= k; ++j) {
            qj = BigFloat(qj / ctx.q());
            recip = recip * fps_geometric(BigFloat(qj * inv_s), order);
        }
        BigFloat pref = pow_int(BigFloat(-inv_s), k);
        pref = BigFloat(pref * ctx.q_pow(-binom2(k) - k));
        acc += (weight * recip.shifted(k).scaled(pref));
    }
    TPS<BigFloat> rhs = (euler_recip * acc).scaled(kern);
    return rhs.coeffs();
}

struct RogersSides {
    std::vector<BigFloat> lhs;
    std::vector<BigFloat> rhs;

    double max_deviation() const {
        double worst = 0.0;
        for (size_t n = 0; n < lhs.size() && n < rhs.size(); ++n)
            worst = std::max(worst, relative_deviation(lhs[n], rhs[n]));
        return worst;
    }
};

inline RogersSides rogers_sides(const ParameterPoint& pt, int order,
                                const Rational& q) {
    auto ctx = make_bigfloat_context(q);
    BigFloat a = scalar_cast<BigFloat>(point_field(pt.a, "a"));
    BigFloat x = scalar_cast<BigFloat>(point_field(pt.x, "x"));
    BigFloat y = scalar_cast<BigFloat>(point_field(pt.y, "y"));
    BigFloat z = scalar_cast<BigFloat>(point_field(pt.z, "z"));
    Rational s_r = point_field(pt.s, "s");
    if (sgn(s_r) == 0) throw DomainViolation("rogers: requires s != 0");
    BigFloat s = scalar_cast<BigFloat>(s_r);
    PsiWeightedCache<BigFloat> S(a, x, y, z, ctx);
    return {rogers_lhs_series(S, s, order, ctx),
            rogers_rhs_series(a, x, y, z, s, order, ctx)};
}

inline IdentityReport verify_rogers(const ParameterPoint& pt, int order,
                                    const Rational& q, double tol) {
    auto sides = rogers_sides(pt, order, q);
    IdentityReport rep;
    rep.id = IdentityId::ROGERS;
    rep.mode = VerifyMode::PointNumeric;
    rep.arithmetic = NumericMode::Float;
    rep.params = pt;
    rep.order_or_points = order;
    rep.max_deviation = sides.max_deviation();
    rep.pass = rep.max_deviation <= tol;
    return rep;
}

/// Bivariate sides for the extended Rogers formula with omega fixed:
/// grids indexed (n, m) with n <= order_t, m <= order_s.
struct ExtendedRogersSides {
    int order_t = 0;
    int order_s = 0;
    std::vector<BigFloat> lhs;  // (order_t+1) x (order_s+1), row-major in n
    std::vector<BigFloat> rhs;

    const BigFloat& lhs_at(int n, int m) const {
        return lhs[static_cast<size_t>(n * (order_s + 1) + m)];
    }
    const BigFloat& rhs_at(int n, int m) const {
        return rhs[static_cast<size_t>(n * (order_s + 1) + m)];
    }
    double max_deviation() const {
        double worst = 0.0;
        for (size_t i = 0; i < lhs.size(); ++i)
            worst = std::max(worst, relative_deviation(lhs[i], rhs[i]));
        return worst;
    }
};

/// LHS coefficient of t^n s^m:
///   sum_k S_{n+m+k} omega^k / ((q;q)_{n+m} (q;q)_m (q;q)_k),
/// the k-sum truncated under the adaptive tail policy (cap order_k).
inline ExtendedRogersSides extended_rogers_sides(const ParameterPoint& pt,
                                                 int order_t, int order_s,
                                                 int order_k,
                                                 const Rational& q) {
    auto ctx = make_bigfloat_context(q);
    BigFloat a = scalar_cast<BigFloat>(point_field(pt.a, "a"));
    BigFloat x = scalar_cast<BigFloat>(point_field(pt.x, "x"));
    BigFloat y = scalar_cast<BigFloat>(point_field(pt.y, "y"));
    BigFloat z = scalar_cast<BigFloat>(point_field(pt.z, "z"));
    Rational omega_r = point_field(pt.omega, "omega");
    if (sgn(omega_r) == 0)
        throw DomainViolation("extended rogers: requires omega != 0");
    BigFloat omega = scalar_cast<BigFloat>(omega_r);

    ExtendedRogersSides sides;
    sides.order_t = order_t;
    sides.order_s = order_s;

    PsiWeightedCache<BigFloat> S(a, x, y, z, ctx);
    std::vector<BigFloat> qq(static_cast<size_t>(order_t + order_s) + 1,
                             BigFloat(1));
    for (int n = 1; n <= order_t + order_s; ++n)
        qq[static_cast<size_t>(n)] =
            BigFloat(qq[static_cast<size_t>(n - 1)] * (BigFloat(1) - ctx.q_pow(n)));

    for (int n = 0; n <= order_t; ++n) {
        for (int m = 0; m <= order_s; ++m) {
            BigFloat w(1);  // omega^k / (q;q)_k
            BigFloat qk(1);
            auto inner = adaptive_sum<BigFloat>(
                [&](int k) {
                    if (k > 0) {
                        w = BigFloat(w * omega /
                                     (BigFloat(1) - BigFloat(qk * ctx.q())));
                        qk = BigFloat(qk * ctx.q());
                    }
                    return BigFloat(w * S(n + m + k));
                },
                ctx.tail_tol(), order_k);
            sides.lhs.push_back(
                BigFloat(inner.value / (qq[static_cast<size_t>(n + m)] *
                                        qq[static_cast<size_t>(m)])));
        }
    }

    auto R = rogers_rhs_series(a, x, y, z, omega, order_t + order_s, ctx);
    for (int n = 0; n <= order_t; ++n)
        for (int m = 0; m <= order_s; ++m)
            sides.rhs.push_back(BigFloat(R[static_cast<size_t>(n + m)] /
                                         qq[static_cast<size_t>(m)]));
    return sides;
}

inline IdentityReport verify_extended_rogers(const ParameterPoint& pt,
                                             int order_t, int order_s,
                                             int order_k, const Rational& q,
                                             double tol) {
    auto sides = extended_rogers_sides(pt, order_t, order_s, order_k, q);
    IdentityReport rep;
    rep.id = IdentityId::EXT_ROGERS;
    rep.mode = VerifyMode::PointNumeric;
    rep.arithmetic = NumericMode::Float;
    rep.params = pt;
    rep.order_or_points = order_t;
    rep.max_deviation = sides.max_deviation();
    rep.pass = rep.max_deviation <= tol;
    return rep;
}

}  // namespace qhahn

#endif  // QHAHN_ROGERS_HPP
