#ifndef QHAHN_OPERATORS_HPP
#define QHAHN_OPERATORS_HPP

// The homogeneous q-difference operator
//   theta{f}(x,y) = [f(q^-1 x, y) - f(x, q y)] / (q^-1 x - y),
// its exponential/Pochhammer-weighted series
//   L(a,b;theta) = sum_k q^(k choose 2) (a;q)_k / (q;q)_k (b theta)^k,
// and the residual checker for the associated q-difference equation.
//
// theta acts on the span of the Cauchy basis {p_n(y,x)} by
//   theta p_n(y,x) = -(1 - q^n) p_{n-1}(y,x),
// so basis coefficients are the faithful representation; the divided
// difference itself is available for numeric cross-checks on arbitrary
// evaluators (including the infinite-product kernels).

#include <qhahn/errors.hpp>
#include <qhahn/polynomials.hpp>
#include <qhahn/qcontext.hpp>
#include <qhahn/scalar.hpp>

#include <functional>
#include <utility>
#include <vector>

namespace qhahn {

/// f(x,y) = sum_n coeffs[n] * p_n(y,x).
template <typename T>
struct CauchyBasisPoly {
    std::vector<T> coeffs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }

    static CauchyBasisPoly zero(int order) {
        return {std::vector<T>(static_cast<size_t>(order) + 1, T(0))};
    }

    /// The element c * p_n(y,x) of order n.
    static CauchyBasisPoly basis(int n, T c) {
        auto poly = zero(n);
        poly.coeffs.back() = std::move(c);
        return poly;
    }

    T eval(const T& x0, const T& y0, const QContext<T>& ctx) const {
        T acc(0);
        T p(1);  // p_n(y0, x0), built incrementally
        T xq = x0;
        for (size_t n = 0; n < coeffs.size(); ++n) {
            acc = T(acc + T(coeffs[n] * p));
            p = T(p * (y0 - xq));
            xq = T(xq * ctx.q());
        }
        return acc;
    }

    bool operator==(const CauchyBasisPoly&) const = default;
};

/// Coefficient action of theta: c_n contributes -(1 - q^n) c_n at index
/// n-1; constants are annihilated. Output order is max(N-1, 0).
template <typename T>
CauchyBasisPoly<T> theta_apply(const CauchyBasisPoly<T>& f, const QContext<T>& ctx) {
    auto out = CauchyBasisPoly<T>::zero(std::max(f.order() - 1, 0));
    for (int n = 1; n <= f.order(); ++n)
        out.coeffs[static_cast<size_t>(n - 1)] =
            T(T(-(T(1) - ctx.q_pow(n))) * f.coeffs[static_cast<size_t>(n)]);
    return out;
}

/// Divided-difference form of theta on an arbitrary two-argument
/// evaluator. Throws SingularPoint when q^-1 x0 is (numerically) equal
/// to y0; in exact mode the test is exact.
template <typename T>
T theta_numeric(const std::function<T(const T&, const T&)>& f, const T& x0,
                const T& y0, const QContext<T>& ctx) {
    T xq = T(x0 / ctx.q());
    T denom = T(xq - y0);
    if constexpr (is_exact_scalar_v<T>) {
        if (is_zero(denom)) throw SingularPoint("theta_numeric: q^-1 x = y");
    } else {
        double guard = 1e-8 * (1.0 + to_double(abs_value(xq)));
        if (to_double(abs_value(denom)) < guard)
            throw SingularPoint("theta_numeric: q^-1 x too close to y");
    }
    return T(T(f(xq, y0) - f(x0, T(y0 * ctx.q()))) / denom);
}

/// theta^k by nested divided differences, sharing evaluations across the
/// lattice of shifted points (q^-i x0, q^j y0).
template <typename T>
T theta_iterated_numeric(const std::function<T(const T&, const T&)>& f, int k,
                         const T& x0, const T& y0, const QContext<T>& ctx) {
    // Arguments at lattice offsets, level 0 values.
    std::vector<T> xs, ys;
    xs.reserve(static_cast<size_t>(k) + 1);
    ys.reserve(static_cast<size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) {
        xs.push_back(i == 0 ? x0 : T(xs.back() / ctx.q()));
        ys.push_back(i == 0 ? y0 : T(ys.back() * ctx.q()));
    }
    auto at = [k](int i, int j) { return static_cast<size_t>(i * (k + 1) + j); };
    std::vector<T> level(static_cast<size_t>((k + 1) * (k + 1)), T(0));
    for (int i = 0; i + 0 <= k; ++i)
        for (int j = 0; i + j <= k; ++j)
            level[at(i, j)] = f(xs[static_cast<size_t>(i)], ys[static_cast<size_t>(j)]);

    for (int lvl = 1; lvl <= k; ++lvl) {
        for (int i = 0; i + lvl <= k; ++i) {
            for (int j = 0; i + j + lvl <= k; ++j) {
                T xq = T(xs[static_cast<size_t>(i)] / ctx.q());
                T denom = T(xq - ys[static_cast<size_t>(j)]);
                bool singular;
                if constexpr (is_exact_scalar_v<T>) {
                    singular = is_zero(denom);
                } else {
                    double guard = 1e-8 * (1.0 + to_double(abs_value(xq)));
                    singular = to_double(abs_value(denom)) < guard;
                }
                if (singular)
                    throw SingularPoint(
                        "theta_iterated_numeric: q^-1 x = y on the shift lattice");
                level[at(i, j)] =
                    T(T(level[at(i + 1, j)] - level[at(i, j + 1)]) / denom);
            }
        }
    }
    return level[at(0, 0)];
}

/// Parameters of L(a,b;theta). Every identity here instantiates b = z,
/// but b is carried as its own field.
template <typename T>
struct OperatorSpec {
    T a;
    T b;
};

/// L(a,b;theta) f = sum_{k=0}^N q^(k choose 2) (a;q)_k / (q;q)_k b^k
/// theta^k f; the sum terminates because theta^(N+1) annihilates
/// order-N input.
template <typename T>
CauchyBasisPoly<T> operator_L_apply(const OperatorSpec<T>& spec,
                                    const CauchyBasisPoly<T>& f,
                                    const QContext<T>& ctx) {
    auto acc = CauchyBasisPoly<T>::zero(f.order());
    CauchyBasisPoly<T> cur = f;
    T weight(1);  // q^(k choose 2) (a;q)_k / (q;q)_k * b^k
    T qk(1);
    for (int k = 0; k <= f.order(); ++k) {
        for (size_t n = 0; n < cur.coeffs.size(); ++n)
            acc.coeffs[n] = T(acc.coeffs[n] + T(weight * cur.coeffs[n]));
        if (k == f.order()) break;
        // weight ratio from k to k+1: q^k (1 - a q^k) b / (1 - q^(k+1))
        weight = T(weight * T(qk * (T(1) - T(spec.a * qk))) * spec.b /
                   (T(1) - T(qk * ctx.q())));
        qk = T(qk * ctx.q());
        cur = theta_apply(cur, ctx);
    }
    return acc;
}

/// Builds sum_n A_n z^n from A_0 = f0 by the recursion
///   A_n = q^(n-1) (1 - a q^(n-1)) / (1 - q^n) theta A_{n-1};
/// must coincide with operator_L_apply(spec{a,z}, f0).
template <typename T>
CauchyBasisPoly<T> solve_qde_series(const CauchyBasisPoly<T>& f0, const T& a,
                                    const T& z, const QContext<T>& ctx) {
    auto acc = f0;
    CauchyBasisPoly<T> A = f0;
    T zn(1);
    T qn1(1);  // q^(n-1)
    for (int n = 1; n <= f0.order(); ++n) {
        A = theta_apply(A, ctx);
        T factor = T(T(qn1 * (T(1) - T(a * qn1))) / (T(1) - ctx.q_pow(n)));
        for (auto& c : A.coeffs) c = T(c * factor);
        zn = T(zn * z);
        for (size_t m = 0; m < A.coeffs.size(); ++m)
            acc.coeffs[m] = T(acc.coeffs[m] + T(A.coeffs[m] * zn));
        qn1 = T(qn1 * ctx.q());
    }
    return acc;
}

/// A five-argument evaluator f(a,b,x,y,z) and a point; reports
/// LHS - RHS of the q-difference equation
///   (q^-1 x - y)[f(z) - f(qz)]
///     = z [f(q^-1 x, qz) - f(x, qy, qz)] + a z [f(qy, q^2 z) - f(q^-1 x, q^2 z)]
/// together with the scale sum used for relative residuals. The argument b
/// is threaded through untouched; the equation never transforms it.
template <typename T>
struct QdeResidual {
    T value;
    T scale;
};

template <typename T>
using FiveArgFn = std::function<T(const T&, const T&, const T&, const T&, const T&)>;

template <typename T>
QdeResidual<T> qde_residual(const FiveArgFn<T>& f, const T& a, const T& b,
                            const T& x, const T& y, const T& z,
                            const QContext<T>& ctx) {
    const T& q = ctx.q();
    T xq = T(x / q);
    if (is_zero(T(xq - y)))
        throw SingularPoint("qde_residual: q^-1 x = y");
    T qz = T(q * z);
    T qqz = T(q * qz);
    T qy = T(q * y);
    T lhs = T(T(xq - y) * T(f(a, b, x, y, z) - f(a, b, x, y, qz)));
    T r1 = T(z * T(f(a, b, xq, y, qz) - f(a, b, x, qy, qz)));
    T r2 = T(T(a * z) * T(f(a, b, x, qy, qqz) - f(a, b, xq, y, qqz)));
    T scale = T(T(abs_value(lhs) + abs_value(r1)) + abs_value(r2));
    return {T(lhs - T(r1 + r2)), std::move(scale)};
}

}  // namespace qhahn

#endif  // QHAHN_OPERATORS_HPP
