#include <doctest.h>

#include <qhahn/identities.hpp>
#include <qhahn/operators.hpp>

#include <array>
#include <vector>

using namespace qhahn;

namespace {

QContext<Rational> exact_ctx(const Rational& q = Rational(1, 2)) {
    return QContext<Rational>(q);
}

QContext<double> float_ctx(double q = 0.5) {
    return QContext<double>(q, 512, 1e-13);
}

const std::vector<std::array<Rational, 2>>& eval_points() {
    static const std::vector<std::array<Rational, 2>> pts = {
        {Rational(2), Rational(1, 3)},   {Rational(1, 2), Rational(1, 5)},
        {Rational(-1, 3), Rational(1)},  {Rational(3, 4), Rational(-2, 5)},
        {Rational(1, 7), Rational(1, 2)},
    };
    return pts;
}

}  // namespace

TEST_CASE("theta_apply on the Cauchy basis") {
    auto ctx = exact_ctx();
    SUBCASE("annihilates constants") {
        auto f = CauchyBasisPoly<Rational>::basis(0, Rational(1));
        auto out = theta_apply(f, ctx);
        CHECK(out.coeffs == std::vector<Rational>{Rational(0)});
    }
    SUBCASE("p_1(y,x) maps to the constant q - 1") {
        auto f = CauchyBasisPoly<Rational>::basis(1, Rational(1));
        auto out = theta_apply(f, ctx);
        CHECK(out.coeffs == std::vector<Rational>{Rational(-1, 2)});
    }
    SUBCASE("coefficient action matches the divided difference pointwise") {
        // f = p_2(y,x); theta f evaluated at (2, 1/3) both ways.
        auto f = CauchyBasisPoly<Rational>::basis(2, Rational(1));
        auto applied = theta_apply(f, ctx);
        std::function<Rational(const Rational&, const Rational&)> eval =
            [&](const Rational& x, const Rational& y) {
                return f.eval(x, y, ctx);
            };
        for (const auto& [x0, y0] : eval_points()) {
            if (Rational(x0 / ctx.q()) == y0) continue;
            CHECK(theta_numeric(eval, x0, y0, ctx) ==
                  applied.eval(x0, y0, ctx));
        }
    }
}

TEST_CASE("theta_numeric") {
    auto ctx = exact_ctx();
    SUBCASE("constants vanish") {
        std::function<Rational(const Rational&, const Rational&)> f =
            [](const Rational&, const Rational&) { return Rational(7); };
        CHECK(theta_numeric(f, Rational(1, 2), Rational(1, 3), ctx) ==
              Rational(0));
    }
    SUBCASE("eigen-action on Cauchy basis elements") {
        for (int n = 1; n <= 6; ++n) {
            std::function<Rational(const Rational&, const Rational&)> f =
                [&, n](const Rational& x, const Rational& y) {
                    return cauchy_p(n, y, x, ctx);
                };
            for (const auto& [x0, y0] : eval_points()) {
                if (Rational(x0 / ctx.q()) == y0) continue;
                Rational expect =
                    Rational(-(Rational(1) - pow_int(ctx.q(), n)) *
                             cauchy_p(n - 1, y0, x0, ctx));
                CHECK(theta_numeric(f, x0, y0, ctx) == expect);
            }
        }
    }
    SUBCASE("singular point raises") {
        std::function<Rational(const Rational&, const Rational&)> f =
            [](const Rational& x, const Rational& y) { return Rational(x * y); };
        // q^-1 x = y at q = 1/2, x = 1/4, y = 1/2.
        CHECK_THROWS_AS(theta_numeric(f, Rational(1, 4), Rational(1, 2), ctx),
                        SingularPoint);
        auto fctx = float_ctx();
        std::function<double(const double&, const double&)> g =
            [](const double& x, const double& y) { return x * y; };
        CHECK_THROWS_AS(theta_numeric(g, 0.25, 0.5 + 1e-12, fctx), SingularPoint);
    }
    SUBCASE("kernel eigen-action: theta -> -t on (xt;q)_inf/(yt;q)_inf") {
        auto fctx = float_ctx();
        double t = 0.2;
        std::function<double(const double&, const double&)> kernel =
            [&](const double& x, const double& y) {
                return qpoch_infinite(x * t, fctx) / qpoch_infinite(y * t, fctx);
            };
        double x0 = 1.0, y0 = 0.25;
        double expect = -t * kernel(x0, y0);
        CHECK(theta_numeric(kernel, x0, y0, fctx) ==
              doctest::Approx(expect).epsilon(1e-10));
    }
}

TEST_CASE("theta_iterated_numeric") {
    auto fctx = float_ctx();
    SUBCASE("k = 1 agrees with theta_numeric") {
        std::function<double(const double&, const double&)> f =
            [](const double& x, const double& y) {
                return (x - y) * (x + 2 * y);
            };
        CHECK(theta_iterated_numeric(f, 1, 0.8, 0.3, fctx) ==
              doctest::Approx(theta_numeric(f, 0.8, 0.3, fctx)).epsilon(1e-13));
    }
    SUBCASE("kernel eigen-action theta^k -> (-t)^k, k <= 4, several points") {
        double t = 1.0 / 5.0;
        std::function<double(const double&, const double&)> kernel =
            [&](const double& x, const double& y) {
                return qpoch_infinite(x * t, fctx) / qpoch_infinite(y * t, fctx);
            };
        const double pts[5][2] = {
            {1.0, 0.25}, {0.7, -0.2}, {-0.5, 0.3}, {0.9, 0.1}, {0.31, -0.45}};
        for (const auto& p : pts) {
            for (int k = 0; k <= 4; ++k) {
                double expect = pow_int(-t, k) * kernel(p[0], p[1]);
                CHECK(theta_iterated_numeric(kernel, k, p[0], p[1], fctx) ==
                      doctest::Approx(expect).epsilon(5e-8));
            }
        }
    }
}

TEST_CASE("operator_L_apply") {
    auto ctx = exact_ctx();
    SUBCASE("constants are fixed") {
        OperatorSpec<Rational> spec{Rational(2, 3), Rational(1, 4)};
        auto f = CauchyBasisPoly<Rational>::basis(0, Rational(1));
        CHECK(operator_L_apply(spec, f, ctx).coeffs ==
              std::vector<Rational>{Rational(1)});
    }
    SUBCASE("a = 0 reduces to the exponential-operator action") {
        // With (0;q)_k = 1 the weights are q^(k choose 2) b^k/(q;q)_k.
        CauchyBasisPoly<Rational> f{{Rational(1, 3), Rational(-2), Rational(1)}};
        Rational b(1, 5);
        auto via_L = operator_L_apply(OperatorSpec<Rational>{Rational(0), b}, f, ctx);
        CauchyBasisPoly<Rational> acc = f;
        auto cur = f;
        Rational w(1);
        Rational qk(1);
        for (int k = 1; k <= f.order(); ++k) {
            cur = theta_apply(cur, ctx);
            w = Rational(w * qk * b / (Rational(1) - Rational(qk * ctx.q())));
            qk = Rational(qk * ctx.q());
            for (size_t i = 0; i < cur.coeffs.size(); ++i)
                acc.coeffs[i] = Rational(acc.coeffs[i] + Rational(w * cur.coeffs[i]));
        }
        CHECK(via_L == acc);
    }
    SUBCASE("basis elements map to the trivariate polynomials (n <= 10)") {
        Rational a(1, 3), z(1, 4);
        OperatorSpec<Rational> spec{a, z};
        for (int n = 0; n <= 10; ++n) {
            Rational scale = pow_int(ctx.q(), -binom2(n));
            if (n % 2 != 0) scale = Rational(-scale);
            auto image =
                operator_L_apply(spec, CauchyBasisPoly<Rational>::basis(n, scale), ctx);
            for (const auto& [x0, y0] : eval_points())
                CHECK(image.eval(x0, y0, ctx) ==
                      psi_trivariate(n, a, x0, y0, z, ctx));
        }
    }
}

TEST_CASE("theta nilpotency") {
    auto ctx = exact_ctx(Rational(7, 10));
    for (int order = 0; order <= 10; ++order) {
        CauchyBasisPoly<Rational> f;
        for (int n = 0; n <= order; ++n)
            f.coeffs.push_back(Rational(n + 1, 2 * n + 3));
        auto cur = f;
        for (int k = 0; k <= order; ++k) cur = theta_apply(cur, ctx);
        for (const auto& c : cur.coeffs) CHECK(c == Rational(0));
        // One application earlier it is still nonzero.
        if (order >= 1) {
            auto prev = f;
            for (int k = 0; k < order; ++k) prev = theta_apply(prev, ctx);
            CHECK(prev.coeffs[0] != Rational(0));
        }
    }
}

TEST_CASE("solve_qde_series equals operator_L_apply") {
    auto ctx = exact_ctx();
    SUBCASE("z = 0 returns the seed") {
        CauchyBasisPoly<Rational> f{{Rational(1, 3), Rational(2), Rational(-1)}};
        CHECK(solve_qde_series(f, Rational(1, 3), Rational(0), ctx) == f);
    }
    SUBCASE("matches the closed operator form on the n = 1 seed") {
        auto f = CauchyBasisPoly<Rational>::basis(1, Rational(-1));
        Rational a(1, 3), z(1, 4);
        CHECK(solve_qde_series(f, a, z, ctx) ==
              operator_L_apply(OperatorSpec<Rational>{a, z}, f, ctx));
    }
    SUBCASE("matches on random-ish seeds and both routes give Psi") {
        Rational a(2, 7), z(-1, 5);
        for (int n = 0; n <= 8; ++n) {
            Rational scale = pow_int(ctx.q(), -binom2(n));
            if (n % 2 != 0) scale = Rational(-scale);
            auto seed = CauchyBasisPoly<Rational>::basis(n, scale);
            auto via_recursion = solve_qde_series(seed, a, z, ctx);
            auto via_operator =
                operator_L_apply(OperatorSpec<Rational>{a, z}, seed, ctx);
            CHECK(via_recursion == via_operator);
            for (const auto& [x0, y0] : eval_points())
                CHECK(via_recursion.eval(x0, y0, ctx) ==
                      psi_trivariate(n, a, x0, y0, z, ctx));
        }
        CauchyBasisPoly<Rational> mixed{
            {Rational(1, 2), Rational(-1, 3), Rational(0), Rational(2, 5)}};
        CHECK(solve_qde_series(mixed, a, z, ctx) ==
              operator_L_apply(OperatorSpec<Rational>{a, z}, mixed, ctx));
    }
}

TEST_CASE("qde_residual") {
    auto ctx = exact_ctx();
    SUBCASE("functions independent of (x,y,z) satisfy the equation identically") {
        // Every bracket pairs two evaluations that differ only in x, y, or z.
        FiveArgFn<Rational> f = [](const Rational& a, const Rational& b,
                                   const Rational&, const Rational&,
                                   const Rational&) {
            return Rational(Rational(a * a) + b);
        };
        auto res = qde_residual(f, Rational(1, 3), Rational(2, 7), Rational(2, 3),
                                Rational(1, 5), Rational(1, 4), ctx);
        CHECK(res.value == Rational(0));
    }
    SUBCASE("singular point raises") {
        FiveArgFn<Rational> f = [](const Rational&, const Rational&,
                                   const Rational&, const Rational&,
                                   const Rational&) { return Rational(1); };
        CHECK_THROWS_AS(qde_residual(f, Rational(0), Rational(0), Rational(1, 4),
                                     Rational(1, 2), Rational(1, 3), ctx),
                        SingularPoint);
    }
    SUBCASE("the b argument is threaded through untouched") {
        // The equation never transforms b, so any pure function of b solves it.
        FiveArgFn<Rational> f = [](const Rational&, const Rational& b,
                                   const Rational&, const Rational&,
                                   const Rational&) {
            return Rational(Rational(b * b) - b);
        };
        auto res = qde_residual(f, Rational(1, 3), Rational(5, 7), Rational(2, 3),
                                Rational(1, 5), Rational(1, 4), ctx);
        CHECK(res.value == Rational(0));
    }
    SUBCASE("a = 0 reduces to the two-bracket form") {
        // With a = 0 the residual must not read the third bracket at all:
        // check against a hand-built two-bracket residual.
        FiveArgFn<Rational> f = [&](const Rational&, const Rational&,
                                    const Rational& x, const Rational& y,
                                    const Rational& z) {
            return Rational(Rational(x * z) - Rational(y * Rational(z * z)));
        };
        Rational x(2, 3), y(1, 5), z(1, 4);
        auto res = qde_residual(f, Rational(0), Rational(0), x, y, z, ctx);
        Rational q = ctx.q();
        Rational xq = Rational(x / q);
        Rational qz = Rational(q * z);
        Rational lhs = Rational(Rational(xq - y) *
                                Rational(f(Rational(0), Rational(0), x, y, z) -
                                         f(Rational(0), Rational(0), x, y, qz)));
        Rational rhs = Rational(
            z * Rational(f(Rational(0), Rational(0), xq, y, qz) -
                         f(Rational(0), Rational(0), x, Rational(q * y), qz)));
        CHECK(res.value == Rational(lhs - rhs));
    }
}

TEST_CASE("kernel identity: L on the Cauchy kernel gives a 1phi1 factor") {
    // L(a,z;theta){(xt;q)_inf/(yt;q)_inf} = kernel * 1phi1(a;0;q,zt),
    // with theta applied by nested divided differences (no eigen shortcut).
    auto fctx = float_ctx();
    const double t = 0.2, a = 1.0 / 3.0, z = 0.25;
    std::function<double(const double&, const double&)> kernel =
        [&](const double& x, const double& y) {
            return qpoch_infinite(x * t, fctx) / qpoch_infinite(y * t, fctx);
        };
    const double pts[5][2] = {
        {1.0, 0.25}, {0.7, -0.2}, {-0.5, 0.3}, {0.9, 0.1}, {0.31, -0.45}};
    for (const auto& p : pts) {
        double acc = 0.0;
        double w = 1.0, qk = 1.0;
        for (int k = 0; k <= 10; ++k) {
            if (k > 0) {
                w *= qk * (1.0 - a * qk) * z / (1.0 - qk * fctx.q());
                qk *= fctx.q();
            }
            acc += w * theta_iterated_numeric(kernel, k, p[0], p[1], fctx);
        }
        double expect =
            kernel(p[0], p[1]) *
            phi(PhiSpec<double>{{a}, {0.0}, z * t}, fctx);
        CHECK(acc == doctest::Approx(expect).epsilon(1e-7));
    }
}
