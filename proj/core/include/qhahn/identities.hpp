#ifndef QHAHN_IDENTITIES_HPP
#define QHAHN_IDENTITIES_HPP

// One verifier per generating-function identity. Two comparison styles:
//
//   Coefficient  - both sides are expanded as truncated power series in t
//                  and compared coefficient-wise. Exact (zero deviation)
//                  in rational arithmetic wherever both sides' coefficients
//                  are rational; otherwise float with a per-coefficient
//                  relative tolerance.
//   PointNumeric - both sides are evaluated as scalars at a parameter
//                  point and compared within a relative tolerance.
//
// Every verifier reports the maximum relative deviation it saw, so a
// passing exact run reports exactly 0.

#include <qhahn/errors.hpp>
#include <qhahn/fps.hpp>
#include <qhahn/operators.hpp>
#include <qhahn/parameter_point.hpp>
#include <qhahn/polynomials.hpp>
#include <qhahn/qcontext.hpp>
#include <qhahn/qcore.hpp>
#include <qhahn/scalar.hpp>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace qhahn {

enum class IdentityId {
    GEN,
    EXT_GEN,
    CAUCHY_GEN,
    QBINOMIAL_THM,
    EULER_PAIR,
    SRIVAS,
    ASC_GEN,
    CHU_VANDERMONDE,
    PROP_CONDS,
    SA,
    SA_1CSUMS,
    LUMS,
    DD1SUMS,
    HEINE,
    ROGERS,
    EXT_ROGERS,
    QDE_F,
    QDE_G,
    QDE_H,
    QDE_HP,
};

enum class VerifyMode { Coefficient, PointNumeric };

struct IdentityReport {
    IdentityId id;
    VerifyMode mode;
    NumericMode arithmetic;
    ParameterPoint params;
    int order_or_points = 0;
    double max_deviation = 0.0;
    bool pass = false;
    double elapsed_ms = 0.0;  // filled by the suite runner
};

/// |l - r| / (1 + max(|l|, |r|)): relative with an absolute floor, and
/// exactly 0.0 for exact equality in rational arithmetic.
template <typename T>
double relative_deviation(const T& l, const T& r) {
    if constexpr (is_exact_scalar_v<T>) {
        if (l == r) return 0.0;
    }
    T num = abs_value(T(l - r));
    T la = abs_value(l);
    T ra = abs_value(r);
    T den = la < ra ? ra : la;
    return to_double(T(num / (T(1) + den)));
}

/// The two expansions a Coefficient-mode verifier compares.
template <typename T>
struct CoefficientSides {
    std::vector<T> lhs;
    std::vector<T> rhs;

    double max_deviation() const {
        double worst = 0.0;
        for (size_t n = 0; n < lhs.size() && n < rhs.size(); ++n)
            worst = std::max(worst, relative_deviation(lhs[n], rhs[n]));
        return worst;
    }
};

namespace detail {

template <typename T>
std::vector<T> series_coeffs(const TPS<T>& s) {
    return s.coeffs();
}

template <typename T>
IdentityReport coefficient_report(IdentityId id, const ParameterPoint& pt,
                                  int order, const CoefficientSides<T>& sides,
                                  double tol) {
    IdentityReport rep;
    rep.id = id;
    rep.mode = VerifyMode::Coefficient;
    rep.arithmetic = numeric_mode_v<T>;
    rep.params = pt;
    rep.order_or_points = order;
    rep.max_deviation = sides.max_deviation();
    rep.pass = rep.max_deviation <= tol;
    return rep;
}

inline IdentityReport point_report(IdentityId id, const ParameterPoint& pt,
                                   int points, double deviation, double tol) {
    IdentityReport rep;
    rep.id = id;
    rep.mode = VerifyMode::PointNumeric;
    rep.arithmetic = NumericMode::Float;
    rep.params = pt;
    rep.order_or_points = points;
    rep.max_deviation = deviation;
    rep.pass = deviation <= tol;
    return rep;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Generating function:
//   sum_n S_n(a,x,y,z) t^n/(q;q)_n = (xt;q)_inf/(yt;q)_inf * 1phi1(a;0;q,zt)
// where S_n = Psi_n * (-1)^n q^(n choose 2).
// ---------------------------------------------------------------------------

template <typename T>
CoefficientSides<T> generating_sides(const ParameterPoint& pt, int order,
                                     const QContext<T>& ctx) {
    T a = scalar_cast<T>(point_field(pt.a, "a"));
    T x = scalar_cast<T>(point_field(pt.x, "x"));
    T y = scalar_cast<T>(point_field(pt.y, "y"));
    T z = scalar_cast<T>(point_field(pt.z, "z"));
    std::vector<T> lhs;
    lhs.reserve(static_cast<size_t>(order) + 1);
    T qq_n(1);
    for (int n = 0; n <= order; ++n) {
        if (n > 0) qq_n = T(qq_n * (T(1) - ctx.q_pow(n)));
        lhs.push_back(T(psi_weighted(n, a, x, y, z, ctx) / qq_n));
    }
    TPS<T> rhs = fps_qprod_infinite(x, order, ctx) *
                 fps_qprod_reciprocal(y, order, ctx) *
                 fps_phi_in_t<T>({a}, {T(0)}, z, order, ctx);
    return {std::move(lhs), detail::series_coeffs(rhs)};
}

template <typename T>
IdentityReport verify_generating(const ParameterPoint& pt, int order,
                                 const QContext<T>& ctx, double tol) {
    return detail::coefficient_report(IdentityId::GEN, pt, order,
                                      generating_sides(pt, order, ctx), tol);
}

// ---------------------------------------------------------------------------
// Extended generating function, index shift k (both sides multiplied by t^k):
//   sum_n S_{n+k} t^{n+k}/(q;q)_n
//     = (xt;q)_inf/(yt;q)_inf * sum_{n=0}^k (q^-k;q)_n (yt;q)_n q^n
//         / ((xt;q)_n (q;q)_n) * 1phi1(a;0;q, z t q^n).
// ---------------------------------------------------------------------------

template <typename T>
CoefficientSides<T> extended_generating_sides(const ParameterPoint& pt, int k,
                                              int order, const QContext<T>& ctx) {
    if (k < 0) throw DomainViolation("extended generating function: k >= 0");
    T a = scalar_cast<T>(point_field(pt.a, "a"));
    T x = scalar_cast<T>(point_field(pt.x, "x"));
    T y = scalar_cast<T>(point_field(pt.y, "y"));
    T z = scalar_cast<T>(point_field(pt.z, "z"));

    std::vector<T> lhs(static_cast<size_t>(order) + 1, T(0));
    T qq_n(1);
    for (int n = 0; n + k <= order; ++n) {
        if (n > 0) qq_n = T(qq_n * (T(1) - ctx.q_pow(n)));
        lhs[static_cast<size_t>(n + k)] =
            T(psi_weighted(n + k, a, x, y, z, ctx) / qq_n);
    }

    TPS<T> inner(order);
    T qmk = ctx.q_pow(-k);
    T scalar(1);  // (q^-k;q)_n q^n / (q;q)_n
    T qn(1);
    for (int n = 0; n <= k; ++n) {
        TPS<T> term = fps_qpoch_poly(y, n, order, ctx) *
                      fps_qpoch_recip(x, n, order, ctx) *
                      fps_phi_in_t<T>({a}, {T(0)}, T(z * qn), order, ctx);
        inner += term.scaled(scalar);
        if (n == k) break;
        scalar = T(scalar * (T(1) - T(qmk * qn)) * ctx.q() / (T(1) - T(qn * ctx.q())));
        qn = T(qn * ctx.q());
    }
    TPS<T> rhs = fps_qprod_infinite(x, order, ctx) *
                 fps_qprod_reciprocal(y, order, ctx) * inner;
    return {std::move(lhs), detail::series_coeffs(rhs)};
}

template <typename T>
IdentityReport verify_extended_generating(const ParameterPoint& pt, int k,
                                          int order, const QContext<T>& ctx,
                                          double tol) {
    ParameterPoint recorded = pt;
    recorded.k = k;
    return detail::coefficient_report(
        IdentityId::EXT_GEN, recorded, order,
        extended_generating_sides(pt, k, order, ctx), tol);
}

// ---------------------------------------------------------------------------
// Cauchy-kernel generating function:
//   sum_n p_n(x,y) t^n/(q;q)_n = (yt;q)_inf / (xt;q)_inf.
// ---------------------------------------------------------------------------

template <typename T>
CoefficientSides<T> cauchy_gen_sides(const ParameterPoint& pt, int order,
                                     const QContext<T>& ctx) {
    T x = scalar_cast<T>(point_field(pt.x, "x"));
    T y = scalar_cast<T>(point_field(pt.y, "y"));
    std::vector<T> lhs;
    T qq_n(1);
    for (int n = 0; n <= order; ++n) {
        if (n > 0) qq_n = T(qq_n * (T(1) - ctx.q_pow(n)));
        lhs.push_back(T(cauchy_p(n, x, y, ctx) / qq_n));
    }
    TPS<T> rhs =
        fps_qprod_infinite(y, order, ctx) * fps_qprod_reciprocal(x, order, ctx);
    return {std::move(lhs), detail::series_coeffs(rhs)};
}

template <typename T>
IdentityReport verify_cauchy_gen(const ParameterPoint& pt, int order,
                                 const QContext<T>& ctx, double tol) {
    return detail::coefficient_report(IdentityId::CAUCHY_GEN, pt, order,
                                      cauchy_gen_sides(pt, order, ctx), tol);
}

// ---------------------------------------------------------------------------
// q-binomial theorem as a series in t:
//   sum_k (a;q)_k z^k t^k/(q;q)_k = (a z t;q)_inf / (z t;q)_inf.
// ---------------------------------------------------------------------------

template <typename T>
CoefficientSides<T> qbinomial_theorem_sides(const ParameterPoint& pt, int order,
                                            const QContext<T>& ctx) {
    T a = scalar_cast<T>(point_field(pt.a, "a"));
    T z = scalar_cast<T>(point_field(pt.z, "z"));
    std::vector<T> lhs;
    T coeff(1);
    T qk(1);
    for (int k = 0; k <= order; ++k) {
        lhs.push_back(coeff);
        coeff = T(coeff * (T(1) - T(a * qk)) * z / (T(1) - T(qk * ctx.q())));
        qk = T(qk * ctx.q());
    }
    TPS<T> rhs = fps_qprod_infinite(T(a * z), order, ctx) *
                 fps_qprod_reciprocal(z, order, ctx);
    return {std::move(lhs), detail::series_coeffs(rhs)};
}

template <typename T>
IdentityReport verify_qbinomial_theorem(const ParameterPoint& pt, int order,
                                        const QContext<T>& ctx, double tol) {
    return detail::coefficient_report(IdentityId::QBINOMIAL_THM, pt, order,
                                      qbinomial_theorem_sides(pt, order, ctx),
                                      tol);
}

// ---------------------------------------------------------------------------
// Euler pair: (zt;q)_inf * 1/(zt;q)_inf = 1 coefficient-wise.
// ---------------------------------------------------------------------------

template <typename T>
CoefficientSides<T> euler_pair_sides(const ParameterPoint& pt, int order,
                                     const QContext<T>& ctx) {
    T z = scalar_cast<T>(point_field(pt.z, "z"));
    TPS<T> lhs =
        fps_qprod_infinite(z, order, ctx) * fps_qprod_reciprocal(z, order, ctx);
    TPS<T> one = TPS<T>::constant(T(1), order);
    return {detail::series_coeffs(lhs), detail::series_coeffs(one)};
}

template <typename T>
IdentityReport verify_euler_pair(const ParameterPoint& pt, int order,
                                 const QContext<T>& ctx, double tol) {
    return detail::coefficient_report(IdentityId::EULER_PAIR, pt, order,
                                      euler_pair_sides(pt, order, ctx), tol);
}

// ---------------------------------------------------------------------------
// Cauchy-polynomial generating function with Pochhammer weight:
//   sum_n p_n(x,y) (lambda;q)_n t^n/(q;q)_n = 2phi1(lambda, y/x; 0; q, x t).
// Requires x != 0 for the parameter y/x.
// ---------------------------------------------------------------------------

template <typename T>
CoefficientSides<T> srivas_sides(const ParameterPoint& pt, int order,
                                 const QContext<T>& ctx) {
    T lambda = scalar_cast<T>(point_field(pt.lambda, "lambda"));
    T x = scalar_cast<T>(point_field(pt.x, "x"));
    T y = scalar_cast<T>(point_field(pt.y, "y"));
    if (is_zero(x)) throw DomainViolation("srivas: requires x != 0");
    std::vector<T> lhs;
    T qq_n(1);
    T poch_l(1);
    T qn(1);
    for (int n = 0; n <= order; ++n) {
        if (n > 0) {
            qq_n = T(qq_n * (T(1) - ctx.q_pow(n)));
            poch_l = T(poch_l * (T(1) - T(lambda * qn)));
            qn = T(qn * ctx.q());
        }
        lhs.push_back(T(cauchy_p(n, x, y, ctx) * poch_l / qq_n));
    }
    TPS<T> rhs =
        fps_phi_in_t<T>({lambda, T(y / x)}, {T(0)}, x, order, ctx);
    return {std::move(lhs), detail::series_coeffs(rhs)};
}

template <typename T>
IdentityReport verify_srivas(const ParameterPoint& pt, int order,
                             const QContext<T>& ctx, double tol) {
    return detail::coefficient_report(IdentityId::SRIVAS, pt, order,
                                      srivas_sides(pt, order, ctx), tol);
}

// ---------------------------------------------------------------------------
// Al-Salam--Carlitz generating function:
//   sum_n Phi_n^(alpha)(x) (lambda;q)_n t^n/(q;q)_n
//     = (lambda t;q)_inf/(t;q)_inf * 2phi1(lambda, alpha; lambda t; q, x t).
// The 2phi1 has a t-dependent lower parameter; its t-expansion is the
// finite sum over j <= order of the j-th term's series, so every RHS
// coefficient is a finite (exact) sum.
// ---------------------------------------------------------------------------

template <typename T>
CoefficientSides<T> asc_genfun_sides(const ParameterPoint& pt, int order,
                                     const QContext<T>& ctx) {
    T alpha = scalar_cast<T>(point_field(pt.a, "a"));
    T lambda = scalar_cast<T>(point_field(pt.lambda, "lambda"));
    T x = scalar_cast<T>(point_field(pt.x, "x"));
    std::vector<T> lhs;
    T qq_n(1);
    T poch_l(1);
    T qn(1);
    for (int n = 0; n <= order; ++n) {
        if (n > 0) {
            qq_n = T(qq_n * (T(1) - ctx.q_pow(n)));
            poch_l = T(poch_l * (T(1) - T(lambda * qn)));
            qn = T(qn * ctx.q());
        }
        lhs.push_back(T(al_salam_carlitz(n, alpha, x, ctx) * poch_l / qq_n));
    }

    TPS<T> phi_part(order);
    T w(1);  // (lambda;q)_j (alpha;q)_j x^j / (q;q)_j
    T qj(1);
    for (int j = 0; j <= order; ++j) {
        phi_part += fps_qpoch_recip(lambda, j, order, ctx).shifted(j).scaled(w);
        if (j == order) break;
        w = T(w * (T(1) - T(lambda * qj)) * (T(1) - T(alpha * qj)) * x /
              (T(1) - T(qj * ctx.q())));
        qj = T(qj * ctx.q());
    }
    TPS<T> rhs = fps_qprod_infinite(lambda, order, ctx) *
                 fps_qprod_reciprocal(T(1), order, ctx) * phi_part;
    return {std::move(lhs), detail::series_coeffs(rhs)};
}

template <typename T>
IdentityReport verify_asc_genfun(const ParameterPoint& pt, int order,
                                 const QContext<T>& ctx, double tol) {
    return detail::coefficient_report(IdentityId::ASC_GEN, pt, order,
                                      asc_genfun_sides(pt, order, ctx), tol);
}

// ---------------------------------------------------------------------------
// q-Chu--Vandermonde: 2phi1(q^-n, a; c; q, q) = (c/a;q)_n a^n / (c;q)_n.
// ---------------------------------------------------------------------------

template <typename T>
IdentityReport verify_chu_vandermonde(int n, const ParameterPoint& pt,
                                      const QContext<T>& ctx, double tol) {
    T a = scalar_cast<T>(point_field(pt.a, "a"));
    T c = scalar_cast<T>(point_field(pt.c, "c"));
    if (is_zero(a)) throw DomainViolation("chu_vandermonde: requires a != 0");
    PhiSpec<T> spec{{ctx.q_pow(-n), a}, {c}, ctx.q()};
    T lhs = phi(spec, ctx);
    T rhs = T(qpoch_finite(T(c / a), n, ctx) * pow_int(a, n) /
              qpoch_finite(c, n, ctx));
    ParameterPoint recorded = pt;
    recorded.k = n;
    IdentityReport rep = detail::point_report(IdentityId::CHU_VANDERMONDE,
                                              recorded, 1,
                                              relative_deviation(lhs, rhs), tol);
    rep.mode = VerifyMode::Coefficient;  // exact scalar identity
    rep.arithmetic = numeric_mode_v<T>;
    return rep;
}

// ---------------------------------------------------------------------------
// Operator representation: for each n,
//   L(a,z;theta){ (-1)^n q^-(n choose 2) p_n(y,x) } = Psi_n^(a)(x,y,z|q),
// compared pointwise at (x,y) after expanding the operator action on the
// Cauchy basis.
// ---------------------------------------------------------------------------

template <typename T>
IdentityReport verify_prop_conds(const ParameterPoint& pt, int n_max,
                                 const QContext<T>& ctx, double tol) {
    T a = scalar_cast<T>(point_field(pt.a, "a"));
    T x = scalar_cast<T>(point_field(pt.x, "x"));
    T y = scalar_cast<T>(point_field(pt.y, "y"));
    T z = scalar_cast<T>(point_field(pt.z, "z"));
    OperatorSpec<T> spec{a, z};
    double worst = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        T scale = ctx.q_pow(-binom2(n));
        if (n % 2 != 0) scale = T(-scale);
        auto image = operator_L_apply(spec, CauchyBasisPoly<T>::basis(n, scale), ctx);
        T lhs = image.eval(x, y, ctx);
        T rhs = psi_trivariate(n, a, x, y, z, ctx);
        worst = std::max(worst, relative_deviation(lhs, rhs));
    }
    IdentityReport rep = detail::point_report(IdentityId::PROP_CONDS, pt,
                                              n_max + 1, worst, tol);
    rep.mode = VerifyMode::Coefficient;
    rep.arithmetic = numeric_mode_v<T>;
    rep.order_or_points = n_max;
    return rep;
}

// ---------------------------------------------------------------------------
// Srivastava--Agarwal type generating functions (Float coefficient mode:
// the RHS t-coefficients are infinite sums of infinite-product values, so
// no exact expansion exists; the sum over the auxiliary index is truncated
// under the adaptive tail policy).
// ---------------------------------------------------------------------------

namespace detail {

/// max |coefficient| of a series, as a double.
template <typename T>
double series_magnitude(const TPS<T>& s) {
    double m = 0.0;
    for (int n = 0; n <= s.order(); ++n)
        m = std::max(m, to_double(abs_value(s[n])));
    return m;
}

/// acc += sum_j term(j), stopping when a 3-term window of series
/// magnitudes certifies a geometric tail below tol.
template <typename T, typename TermFn>
void accumulate_series_sum(TPS<T>& acc, TermFn&& term, double tol, int cap) {
    double window[3] = {0, 0, 0};
    const double tail_factor = kTailRatio / (1.0 - kTailRatio);
    for (int j = 0; j < cap; ++j) {
        TPS<T> t = term(j);
        acc += t;
        window[j % 3] = series_magnitude(t);
        if (j >= 3) {
            double wmax = std::max({window[0], window[1], window[2]});
            if (wmax * tail_factor < tol) return;
        }
    }
    throw NonConvergent("series sum: truncation cap reached");
}

}  // namespace detail

/// sum_n S_n(a,x,y,z) p_n(nu,mu) t^n/(q;q)_n
///   = (mu/nu;q)_inf * sum_j (mu/nu)^j/(q;q)_j
///       * (x nu t q^j;q)_inf/(y nu t q^j;q)_inf * 1phi1(a;0;q, z nu t q^j).
/// Degenerate at mu = nu (zero prefactor, undefined limit): rejected.
inline CoefficientSides<double> sa_sides(const ParameterPoint& pt, int order,
                                         const QContext<double>& ctx) {
    double a = scalar_cast<double>(point_field(pt.a, "a"));
    double x = scalar_cast<double>(point_field(pt.x, "x"));
    double y = scalar_cast<double>(point_field(pt.y, "y"));
    double z = scalar_cast<double>(point_field(pt.z, "z"));
    Rational mu_r = point_field(pt.mu, "mu");
    Rational nu_r = point_field(pt.nu, "nu");
    if (mu_r == nu_r)
        throw DomainViolation("sa: mu = nu is a degenerate point");
    if (sgn(nu_r) == 0) throw DomainViolation("sa: nu must be nonzero");
    double mu = scalar_cast<double>(mu_r);
    double nu = scalar_cast<double>(nu_r);
    double ratio = mu / nu;
    if (!(std::abs(ratio) < 1.0))
        throw DomainViolation("sa: requires |mu/nu| < 1 for truncation");

    std::vector<double> lhs;
    double qq_n = 1.0;
    for (int n = 0; n <= order; ++n) {
        if (n > 0) qq_n *= 1.0 - to_double(ctx.q_pow(n));
        lhs.push_back(psi_weighted(n, a, x, y, z, ctx) *
                      cauchy_p(n, nu, mu, ctx) / qq_n);
    }

    double pref = qpoch_infinite(ratio, ctx);
    TPS<double> acc(order);
    double w = 1.0;  // (mu/nu)^j / (q;q)_j
    double qj = 1.0;
    detail::accumulate_series_sum(
        acc,
        [&](int j) {
            if (j > 0) {
                w *= ratio / (1.0 - qj * ctx.q());
                qj *= ctx.q();
            }
            double cj = nu * qj;
            TPS<double> term = fps_qprod_infinite(x * cj, order, ctx) *
                               fps_qprod_reciprocal(y * cj, order, ctx) *
                               fps_phi_in_t<double>({a}, {0.0}, z * cj, order, ctx);
            return term.scaled(w);
        },
        ctx.tail_tol(), ctx.trunc_order());
    TPS<double> rhs = acc.scaled(pref);
    return {std::move(lhs), detail::series_coeffs(rhs)};
}

inline IdentityReport verify_srivastava_agarwal(const ParameterPoint& pt,
                                                int order,
                                                const QContext<double>& ctx,
                                                double tol) {
    return detail::coefficient_report(IdentityId::SA, pt, order,
                                      sa_sides(pt, order, ctx), tol);
}

/// The nu = 1, mu = lambda specialization, with weight (lambda;q)_n.
/// Degenerate at lambda = 1 (zero prefactor (lambda;q)_inf): rejected.
inline CoefficientSides<double> sa_1csums_sides(const ParameterPoint& pt,
                                                int order,
                                                const QContext<double>& ctx) {
    double a = scalar_cast<double>(point_field(pt.a, "a"));
    double x = scalar_cast<double>(point_field(pt.x, "x"));
    double y = scalar_cast<double>(point_field(pt.y, "y"));
    double z = scalar_cast<double>(point_field(pt.z, "z"));
    Rational lambda_r = point_field(pt.lambda, "lambda");
    if (lambda_r == Rational(1))
        throw DomainViolation("sa_1csums: lambda = 1 is a degenerate point");
    double lambda = scalar_cast<double>(lambda_r);
    if (!(std::abs(lambda) < 1.0))
        throw DomainViolation("sa_1csums: requires |lambda| < 1 for truncation");

    std::vector<double> lhs;
    double qq_n = 1.0;
    double poch_l = 1.0;
    double qn = 1.0;
    for (int n = 0; n <= order; ++n) {
        if (n > 0) {
            qq_n *= 1.0 - to_double(ctx.q_pow(n));
            poch_l *= 1.0 - lambda * qn;
            qn *= ctx.q();
        }
        lhs.push_back(psi_weighted(n, a, x, y, z, ctx) * poch_l / qq_n);
    }

    double pref = qpoch_infinite(lambda, ctx);
    TPS<double> acc(order);
    double w = 1.0;
    double qj = 1.0;
    detail::accumulate_series_sum(
        acc,
        [&](int j) {
            if (j > 0) {
                w *= lambda / (1.0 - qj * ctx.q());
                qj *= ctx.q();
            }
            TPS<double> term = fps_qprod_infinite(x * qj, order, ctx) *
                               fps_qprod_reciprocal(y * qj, order, ctx) *
                               fps_phi_in_t<double>({a}, {0.0}, z * qj, order, ctx);
            return term.scaled(w);
        },
        ctx.tail_tol(), ctx.trunc_order());
    TPS<double> rhs = acc.scaled(pref);
    return {std::move(lhs), detail::series_coeffs(rhs)};
}

inline IdentityReport verify_sa_1csums(const ParameterPoint& pt, int order,
                                       const QContext<double>& ctx, double tol) {
    return detail::coefficient_report(IdentityId::SA_1CSUMS, pt, order,
                                      sa_1csums_sides(pt, order, ctx), tol);
}

/// Shared builder for the two Hahn-polynomial generating functions:
///   sum_n psi_n^(a)(x,y|q) (lambda;q)_n (-1)^n q^(n choose 2) t^n/(q;q)_n
///     = (lambda;q)_inf (xt;q)_inf (yt;q)_inf / (a x t;q)_inf
///       * 3phi2(a x t, 0, 0; x t, y t; q, lambda),
/// with y = 1 giving the single-variable form.
inline CoefficientSides<double> hahn_gen_sides(double a, double x, double y,
                                               const Rational& lambda_r,
                                               int order,
                                               const QContext<double>& ctx) {
    if (lambda_r == Rational(1))
        throw DomainViolation("hahn generating function: lambda = 1 is degenerate");
    double lambda = scalar_cast<double>(lambda_r);
    if (!(std::abs(lambda) < 1.0))
        throw DomainViolation("hahn generating function: requires |lambda| < 1");

    std::vector<double> lhs;
    double qq_n = 1.0;
    double poch_l = 1.0;
    double qn = 1.0;
    for (int n = 0; n <= order; ++n) {
        if (n > 0) {
            qq_n *= 1.0 - to_double(ctx.q_pow(n));
            poch_l *= 1.0 - lambda * qn;
            qn *= ctx.q();
        }
        // psi_n^(a)(x,y) (-1)^n q^(n choose 2) = S_n(0, x, a x, y)
        lhs.push_back(psi_weighted(n, 0.0, x, a * x, y, ctx) * poch_l / qq_n);
    }

    TPS<double> acc(order);
    double w = 1.0;  // lambda^j / (q;q)_j
    double qj = 1.0;
    detail::accumulate_series_sum(
        acc,
        [&](int j) {
            if (j > 0) {
                w *= lambda / (1.0 - qj * ctx.q());
                qj *= ctx.q();
            }
            TPS<double> term = fps_qpoch_poly(a * x, j, order, ctx) *
                               fps_qpoch_recip(x, j, order, ctx) *
                               fps_qpoch_recip(y, j, order, ctx);
            return term.scaled(w);
        },
        ctx.tail_tol(), ctx.trunc_order());
    double pref = qpoch_infinite(lambda, ctx);
    TPS<double> rhs = (fps_qprod_infinite(x, order, ctx) *
                       fps_qprod_infinite(y, order, ctx) *
                       fps_qprod_reciprocal(a * x, order, ctx) * acc)
                          .scaled(pref);
    return {std::move(lhs), detail::series_coeffs(rhs)};
}

inline CoefficientSides<double> lums_sides(const ParameterPoint& pt, int order,
                                           const QContext<double>& ctx) {
    return hahn_gen_sides(scalar_cast<double>(point_field(pt.a, "a")),
                          scalar_cast<double>(point_field(pt.x, "x")),
                          scalar_cast<double>(point_field(pt.y, "y")),
                          point_field(pt.lambda, "lambda"), order, ctx);
}

inline IdentityReport verify_lums(const ParameterPoint& pt, int order,
                                  const QContext<double>& ctx, double tol) {
    return detail::coefficient_report(IdentityId::LUMS, pt, order,
                                      lums_sides(pt, order, ctx), tol);
}

inline CoefficientSides<double> dd1sums_sides(const ParameterPoint& pt,
                                              int order,
                                              const QContext<double>& ctx) {
    return hahn_gen_sides(scalar_cast<double>(point_field(pt.a, "a")),
                          scalar_cast<double>(point_field(pt.x, "x")), 1.0,
                          point_field(pt.lambda, "lambda"), order, ctx);
}

inline IdentityReport verify_dd1sums(const ParameterPoint& pt, int order,
                                     const QContext<double>& ctx, double tol) {
    return detail::coefficient_report(IdentityId::DD1SUMS, pt, order,
                                      dd1sums_sides(pt, order, ctx), tol);
}

// ---------------------------------------------------------------------------
// Heine transformation (PointNumeric):
//   2phi1(a,b;c;q,z) = (b;q)_inf (az;q)_inf / ((c;q)_inf (z;q)_inf)
//                      * 2phi1(c/b, z; az; q, b),  |b|,|c|,|z| < 1.
// ---------------------------------------------------------------------------

inline IdentityReport verify_heine(const ParameterPoint& pt,
                                   const QContext<double>& ctx, double tol) {
    double a = scalar_cast<double>(point_field(pt.a, "a"));
    double b = scalar_cast<double>(point_field(pt.b, "b"));
    double c = scalar_cast<double>(point_field(pt.c, "c"));
    double z = scalar_cast<double>(point_field(pt.z, "z"));
    if (is_zero(b)) throw DomainViolation("heine: requires b != 0");
    if (!(std::abs(b) < 1.0 && std::abs(c) < 1.0 && std::abs(z) < 1.0))
        throw DomainViolation("heine: requires |b|, |c|, |z| < 1");
    double lhs = phi(PhiSpec<double>{{a, b}, {c}, z}, ctx);
    double pref = qpoch_infinite(b, ctx) * qpoch_infinite(a * z, ctx) /
                  (qpoch_infinite(c, ctx) * qpoch_infinite(z, ctx));
    double rhs = pref * phi(PhiSpec<double>{{c / b, z}, {a * z}, b}, ctx);
    return detail::point_report(IdentityId::HEINE, pt, 1,
                                relative_deviation(lhs, rhs), tol);
}

// ---------------------------------------------------------------------------
// q-difference-equation residuals for the four proof kernels. Each kernel
// is a sum of terms (x c q^j;q)_inf/(y c q^j;q)_inf * 1phi1(a;0;q, z c q^j)
// and must satisfy the q-difference equation in (x, y, z) exactly; the
// verifier reports the numerically observed relative residual.
// ---------------------------------------------------------------------------

enum class QdeKernel {
    ExtendedGenerating,  // finite sum, shift parameter k, variable t
    Rogers,              // k-sum with fixed (t, s)
    ExtendedRogers,      // k-sum with fixed (t, s, omega)
    SrivastavaAgarwal,   // n-sum with fixed (t, mu, nu)
};

namespace detail {

inline double kernel_term(double a, double x, double y, double z, double c,
                          const QContext<double>& ctx) {
    return qpoch_infinite(x * c, ctx) / qpoch_infinite(y * c, ctx) *
           phi(PhiSpec<double>{{a}, {0.0}, z * c}, ctx);
}

}  // namespace detail

/// Builds the named kernel as a five-argument evaluator f(a,b,x,y,z) with
/// the auxiliary variables fixed from the point.
inline FiveArgFn<double> make_qde_kernel(QdeKernel which,
                                         const ParameterPoint& pt,
                                         const QContext<double>& ctx) {
    switch (which) {
        case QdeKernel::ExtendedGenerating: {
            double t = scalar_cast<double>(point_field(pt.t, "t"));
            long k = pt.k.value_or(1);
            if (is_zero(t))
                throw DomainViolation("qde kernel: requires t != 0");
            return [t, k, ctx](const double& a, const double&, const double& x,
                               const double& y, const double& z) {
                double acc = 0.0;
                double scalar = 1.0;  // (q^-k;q)_n q^n/(q;q)_n
                double qmk = to_double(ctx.q_pow(-k));
                double qn = 1.0;
                for (long n = 0; n <= k; ++n) {
                    acc += scalar * detail::kernel_term(a, x, y, z, t * qn, ctx);
                    if (n == k) break;
                    scalar *= (1.0 - qmk * qn) * ctx.q() / (1.0 - qn * ctx.q());
                    qn *= ctx.q();
                }
                return acc * pow_int(t, -k);
            };
        }
        case QdeKernel::Rogers: {
            double t = scalar_cast<double>(point_field(pt.t, "t"));
            double s = scalar_cast<double>(point_field(pt.s, "s"));
            if (is_zero(t) || is_zero(s))
                throw DomainViolation("qde kernel: requires t, s != 0");
            return [t, s, ctx](const double& a, const double&, const double& x,
                               const double& y, const double& z) {
                double pref = 1.0 / qpoch_infinite(t / s, ctx);
                double sqt = s * ctx.q() / t;
                auto result = adaptive_sum<double>(
                    [&, w = 1.0, qk = 1.0](int k) mutable {
                        if (k > 0) {
                            w *= ctx.q() / ((1.0 - sqt * qk) * (1.0 - qk * ctx.q()));
                            qk *= ctx.q();
                        }
                        return w * detail::kernel_term(a, x, y, z, s * qk, ctx);
                    },
                    ctx.tail_tol(), ctx.trunc_order());
                return pref * result.value;
            };
        }
        case QdeKernel::ExtendedRogers: {
            double t = scalar_cast<double>(point_field(pt.t, "t"));
            double s = scalar_cast<double>(point_field(pt.s, "s"));
            double omega = scalar_cast<double>(point_field(pt.omega, "omega"));
            if (is_zero(t) || is_zero(omega))
                throw DomainViolation("qde kernel: requires t, omega != 0");
            return [t, s, omega, ctx](const double& a, const double&,
                                      const double& x, const double& y,
                                      const double& z) {
                double pref = 1.0 / (qpoch_infinite(s / t, ctx) *
                                     qpoch_infinite(t / omega, ctx));
                double qot = ctx.q() * omega / t;
                auto result = adaptive_sum<double>(
                    [&, w = 1.0, qk = 1.0](int k) mutable {
                        if (k > 0) {
                            w *= ctx.q() / ((1.0 - qot * qk) * (1.0 - qk * ctx.q()));
                            qk *= ctx.q();
                        }
                        return w * detail::kernel_term(a, x, y, z, omega * qk, ctx);
                    },
                    ctx.tail_tol(), ctx.trunc_order());
                return pref * result.value;
            };
        }
        case QdeKernel::SrivastavaAgarwal: {
            double t = scalar_cast<double>(point_field(pt.t, "t"));
            Rational mu_r = point_field(pt.mu, "mu");
            Rational nu_r = point_field(pt.nu, "nu");
            if (mu_r == nu_r)
                throw DomainViolation("qde kernel: mu = nu is degenerate");
            if (sgn(nu_r) == 0 || is_zero(t))
                throw DomainViolation("qde kernel: requires nu, t != 0");
            double ratio = scalar_cast<double>(mu_r) / scalar_cast<double>(nu_r);
            double nu = scalar_cast<double>(nu_r);
            if (!(std::abs(ratio) < 1.0))
                throw DomainViolation("qde kernel: requires |mu/nu| < 1");
            return [t, nu, ratio, ctx](const double& a, const double&,
                                       const double& x, const double& y,
                                       const double& z) {
                double pref = qpoch_infinite(ratio, ctx);
                auto result = adaptive_sum<double>(
                    [&, w = 1.0, qn = 1.0](int n) mutable {
                        if (n > 0) {
                            w *= ratio / (1.0 - qn * ctx.q());
                            qn *= ctx.q();
                        }
                        return w * detail::kernel_term(a, x, y, z, nu * t * qn, ctx);
                    },
                    ctx.tail_tol(), ctx.trunc_order());
                return pref * result.value;
            };
        }
    }
    throw DomainViolation("unknown qde kernel");
}

inline IdentityId qde_identity_id(QdeKernel which) {
    switch (which) {
        case QdeKernel::ExtendedGenerating: return IdentityId::QDE_F;
        case QdeKernel::Rogers: return IdentityId::QDE_G;
        case QdeKernel::ExtendedRogers: return IdentityId::QDE_H;
        case QdeKernel::SrivastavaAgarwal: return IdentityId::QDE_HP;
    }
    throw DomainViolation("unknown qde kernel");
}

inline IdentityReport verify_qde_solutions(QdeKernel which,
                                           const ParameterPoint& pt,
                                           const QContext<double>& ctx,
                                           double tol) {
    double a = scalar_cast<double>(point_field(pt.a, "a"));
    double x = scalar_cast<double>(point_field(pt.x, "x"));
    double y = scalar_cast<double>(point_field(pt.y, "y"));
    double z = scalar_cast<double>(point_field(pt.z, "z"));
    auto kernel = make_qde_kernel(which, pt, ctx);
    auto res = qde_residual(kernel, a, 0.0, x, y, z, ctx);
    double deviation = std::abs(res.value) / std::max(1.0, res.scale);
    return detail::point_report(qde_identity_id(which), pt, 1, deviation, tol);
}

}  // namespace qhahn

#endif  // QHAHN_IDENTITIES_HPP
