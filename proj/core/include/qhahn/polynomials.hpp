#ifndef QHAHN_POLYNOMIALS_HPP
#define QHAHN_POLYNOMIALS_HPP

// The polynomial families: Cauchy p_n, Al-Salam--Carlitz Phi_n^(a), the
// Hahn polynomials psi_n^(a)(x|q) and psi_n^(a)(x,y|q), the trivariate
// F_n(x,y,z;q), and the generalized trivariate Psi_n^(a)(x,y,z|q) that
// specializes to all of the above.

#include <qhahn/qcontext.hpp>
#include <qhahn/qcore.hpp>
#include <qhahn/scalar.hpp>

namespace qhahn {

enum class FamilyId {
    Cauchy,          // p_n(x,y), arity (n, x, y)
    AlSalamCarlitz,  // Phi_n^(a)(x|q), arity (n, a, x)
    Hahn1,           // psi_n^(a)(x|q), arity (n, a, x)
    Hahn2,           // psi_n^(a)(x,y|q), arity (n, a, x, y)
    TrivariateF,     // F_n(x,y,z;q), arity (n, x, y, z)
    TrivariatePsi,   // Psi_n^(a)(x,y,z|q), arity (n, a, x, y, z)
};

/// Cauchy polynomial p_n(x,y) = (x-y)(x-qy)...(x-q^(n-1)y), evaluated by
/// the product form so that x = 0 is legal (the equivalent closed form
/// (y/x;q)_n x^n is not total).
template <typename T>
T cauchy_p(int n, const T& x, const T& y, const QContext<T>& ctx) {
    T prod(1);
    T yq = y;
    for (int j = 0; j < n; ++j) {
        prod = T(prod * (x - yq));
        yq = T(yq * ctx.q());
    }
    return prod;
}

/// The sign/scale-normalized sum
///   S_n(a,x,y,z) = sum_{k=0}^n [n,k]_q (-1)^k q^(k choose 2) (a;q)_k
///                  p_{n-k}(y,x) z^k
/// so that Psi_n = (-1)^n q^-(n choose 2) S_n. Every generating-function
/// weight pairs Psi_n with (-1)^n q^(n choose 2), i.e. uses S_n directly;
/// working with S_n avoids the extreme q^-(n choose 2) scale in Float mode.
template <typename T>
T psi_weighted(int n, const T& a, const T& x, const T& y, const T& z,
               const QContext<T>& ctx) {
    // Prefix products p_m(y,x) for m = 0..n.
    std::vector<T> p(static_cast<size_t>(n) + 1, T(1));
    {
        T xq = x;
        for (int m = 1; m <= n; ++m) {
            p[static_cast<size_t>(m)] = T(p[static_cast<size_t>(m - 1)] * (y - xq));
            xq = T(xq * ctx.q());
        }
    }
    T acc(0);
    T qbin(1);      // [n,k]_q
    T sign_pow(1);  // (-1)^k q^(k choose 2)
    T poch_a(1);    // (a;q)_k
    T zk(1);        // z^k
    T qk(1);        // q^k
    for (int k = 0; k <= n; ++k) {
        acc = T(acc + T(T(qbin * sign_pow) * T(poch_a * T(p[static_cast<size_t>(n - k)] * zk))));
        if (k == n) break;
        qbin = T(qbin * (T(1) - ctx.q_pow(n - k)) / (T(1) - ctx.q_pow(k + 1)));
        sign_pow = T(sign_pow * T(-qk));
        poch_a = T(poch_a * (T(1) - T(a * qk)));
        zk = T(zk * z);
        qk = T(qk * ctx.q());
    }
    return acc;
}

/// Generalized trivariate polynomial
///   Psi_n^(a)(x,y,z|q) = (-1)^n q^-(n choose 2) S_n(a,x,y,z),
/// by the definitional double sum. The operator route (operator_L_apply on
/// the Cauchy basis) is a cross-check, not the definition.
template <typename T>
T psi_trivariate(int n, const T& a, const T& x, const T& y, const T& z,
                 const QContext<T>& ctx) {
    T s = psi_weighted(n, a, x, y, z, ctx);
    T scale = ctx.q_pow(-binom2(n));
    if (n % 2 != 0) scale = T(-scale);
    return T(scale * s);
}

/// F_n(x,y,z;q) = Psi_n^(0)(x,y,z|q).
template <typename T>
T f_trivariate(int n, const T& x, const T& y, const T& z, const QContext<T>& ctx) {
    return psi_trivariate(n, T(0), x, y, z, ctx);
}

/// psi_n^(a)(x,y|q) = Psi_n^(0)(x, a x, y|q).
template <typename T>
T hahn2(int n, const T& a, const T& x, const T& y, const QContext<T>& ctx) {
    return psi_trivariate(n, T(0), x, T(a * x), y, ctx);
}

/// psi_n^(a)(x|q) = Psi_n^(0)(x, a x, 1|q).
template <typename T>
T hahn1(int n, const T& a, const T& x, const QContext<T>& ctx) {
    return psi_trivariate(n, T(0), x, T(a * x), T(1), ctx);
}

/// Al-Salam--Carlitz polynomial Phi_n^(a)(x|q) = sum_k [n,k]_q (a;q)_k x^k.
template <typename T>
T al_salam_carlitz(int n, const T& a, const T& x, const QContext<T>& ctx) {
    T acc(0);
    T qbin(1);
    T poch_a(1);
    T xk(1);
    T qk(1);
    for (int k = 0; k <= n; ++k) {
        acc = T(acc + T(qbin * T(poch_a * xk)));
        if (k == n) break;
        qbin = T(qbin * (T(1) - ctx.q_pow(n - k)) / (T(1) - ctx.q_pow(k + 1)));
        poch_a = T(poch_a * (T(1) - T(a * qk)));
        xk = T(xk * x);
        qk = T(qk * ctx.q());
    }
    return acc;
}

}  // namespace qhahn

#endif  // QHAHN_POLYNOMIALS_HPP
