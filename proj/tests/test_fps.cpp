#include <doctest.h>

#include <qhahn/fps.hpp>
#include <qhahn/polynomials.hpp>

#include <random>

using namespace qhahn;

namespace {

QContext<Rational> exact_ctx(const Rational& q = Rational(1, 2)) {
    return QContext<Rational>(q);
}

TPS<Rational> random_series(std::mt19937_64& rng, int order) {
    TPS<Rational> s(order);
    for (int k = 0; k <= order; ++k) {
        long num = static_cast<long>(rng() % 19) - 9;
        long den = 1 + static_cast<long>(rng() % 9);
        Rational r(num, den);
        r.canonicalize();  // the two-argument ctor does not reduce
        s[k] = r;
    }
    return s;
}

}  // namespace

TEST_CASE("series arithmetic basics") {
    SUBCASE("(1+t)(1-t) = 1 - t^2 at order 2") {
        TPS<Rational> p(2), m(2);
        p[0] = 1; p[1] = 1;
        m[0] = 1; m[1] = -1;
        auto prod = p * m;
        CHECK(prod[0] == Rational(1));
        CHECK(prod[1] == Rational(0));
        CHECK(prod[2] == Rational(-1));
    }
    SUBCASE("multiplicative identity") {
        std::mt19937_64 rng(7);
        auto f = random_series(rng, 9);
        CHECK(f * TPS<Rational>::constant(Rational(1), 9) == f);
    }
    SUBCASE("order policy: min of operand orders, never silently extended") {
        std::mt19937_64 rng(8);
        auto f = random_series(rng, 10);
        auto g = random_series(rng, 6);
        CHECK((f * g).order() == 6);
        CHECK((f + g).order() == 6);
        CHECK((f - g).order() == 6);
    }
    SUBCASE("inverse needs c0 != 0") {
        TPS<Rational> f(3);
        f[1] = 1;
        CHECK_THROWS_AS(f.inverse(), DomainViolation);
        f[0] = Rational(2, 3);
        auto one = f * f.inverse();
        CHECK(one == TPS<Rational>::constant(Rational(1), 3));
    }
}

TEST_CASE("ring laws at fixed order (random rational coefficients)") {
    std::mt19937_64 rng(42);
    for (int rep = 0; rep < 25; ++rep) {
        int order = 1 + static_cast<int>(rng() % 12);
        auto f = random_series(rng, order);
        auto g = random_series(rng, order);
        auto h = random_series(rng, order);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
    }
}

TEST_CASE("fps_qprod_infinite coefficients") {
    auto ctx = exact_ctx();
    SUBCASE("c = 0 gives the constant series 1") {
        CHECK(fps_qprod_infinite(Rational(0), 6, ctx) ==
              TPS<Rational>::constant(Rational(1), 6));
    }
    SUBCASE("q = 1/2, c = 1: coeff1 = -2, coeff2 = 4/3") {
        auto s = fps_qprod_infinite(Rational(1), 4, ctx);
        CHECK(s[0] == Rational(1));
        CHECK(s[1] == Rational(-2));
        CHECK(s[2] == Rational(4, 3));
    }
    SUBCASE("coefficients match the closed form") {
        Rational c(2, 5);
        auto s = fps_qprod_infinite(c, 10, ctx);
        for (int k = 0; k <= 10; ++k) {
            Rational expect =
                Rational(pow_int(ctx.q(), binom2(k)) * pow_int(c, k));
            expect = Rational(expect / qpoch_finite(ctx.q(), k, ctx));
            if (k % 2 != 0) expect = Rational(-expect);
            CHECK(s[k] == expect);
        }
    }
    SUBCASE("float evaluation matches qpoch_infinite") {
        QContext<double> fctx(0.5, 512, 1e-13);
        auto s = fps_qprod_infinite(1.0 / 3.0, 40, fctx);
        double via_series = fps_eval(s, 0.1);
        double direct = qpoch_infinite(0.1 / 3.0, fctx);
        CHECK(via_series == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("fps_qprod_reciprocal coefficients and the Euler pair") {
    auto ctx = exact_ctx();
    CHECK(fps_qprod_reciprocal(Rational(0), 5, ctx) ==
          TPS<Rational>::constant(Rational(1), 5));
    CHECK(fps_qprod_reciprocal(Rational(1), 3, ctx)[1] == Rational(2));

    SUBCASE("product with fps_qprod_infinite is exactly 1") {
        for (const auto& c : {Rational(1), Rational(1, 3), Rational(-2, 7)}) {
            auto prod = fps_qprod_infinite(c, 12, ctx) *
                        fps_qprod_reciprocal(c, 12, ctx);
            CHECK(prod == TPS<Rational>::constant(Rational(1), 12));
        }
    }
    SUBCASE("reciprocal route agrees with series inverse") {
        Rational c(3, 4);
        CHECK(fps_qprod_reciprocal(c, 10, ctx) ==
              fps_qprod_infinite(c, 10, ctx).inverse());
    }
    SUBCASE("float cross-check at a point") {
        QContext<double> fctx(0.5, 512, 1e-13);
        double via_series = fps_eval(fps_qprod_reciprocal(1.0, 30, fctx), 0.1);
        CHECK(via_series ==
              doctest::Approx(1.0 / qpoch_infinite(0.1, fctx)).epsilon(1e-10));
    }
}

TEST_CASE("q-binomial theorem as series") {
    auto ctx = exact_ctx();
    Rational a(1, 3), c(2, 5);
    auto lhs = fps_qprod_infinite(Rational(a * c), 12, ctx) *
               fps_qprod_reciprocal(c, 12, ctx);
    for (int k = 0; k <= 12; ++k) {
        Rational expect = Rational(qpoch_finite(a, k, ctx) * pow_int(c, k));
        expect = Rational(expect / qpoch_finite(ctx.q(), k, ctx));
        CHECK(lhs[k] == expect);
    }
}

TEST_CASE("Cauchy generating function coefficients") {
    for (const auto& q : {Rational(1, 2), Rational(3, 10)}) {
        auto ctx = exact_ctx(q);
        Rational x(1, 4), y(-2, 5);
        auto s = fps_qprod_infinite(y, 10, ctx) * fps_qprod_reciprocal(x, 10, ctx);
        for (int n = 0; n <= 10; ++n) {
            Rational expect = Rational(cauchy_p(n, x, y, ctx) /
                                       qpoch_finite(ctx.q(), n, ctx));
            CHECK(s[n] == expect);
        }
    }
}

TEST_CASE("fps_phi_in_t") {
    auto ctx = exact_ctx();
    SUBCASE("c = 0 gives 1") {
        CHECK(fps_phi_in_t<Rational>({Rational(1, 3)}, {Rational(0)}, Rational(0),
                                     5, ctx) ==
              TPS<Rational>::constant(Rational(1), 5));
    }
    SUBCASE("1phi1(a;0) first coefficient") {
        auto s = fps_phi_in_t<Rational>({Rational(1, 4)}, {Rational(0)},
                                        Rational(1), 4, ctx);
        CHECK(s[1] == Rational(-3, 2));  // -(1-a)/(1-q) at a=1/4, q=1/2
    }
    SUBCASE("2phi1 matches the brute-force term loop") {
        Rational a(1, 3), b(-1, 4), c(1, 5), arg(2, 7);
        auto s = fps_phi_in_t<Rational>({a, b}, {c}, arg, 9, ctx);
        for (int n = 0; n <= 9; ++n) {
            Rational term =
                Rational(qpoch_multi(std::vector<Rational>{a, b}, n, ctx) *
                         pow_int(arg, n));
            term = Rational(term / (qpoch_finite(c, n, ctx) *
                                    qpoch_finite(ctx.q(), n, ctx)));
            CHECK(s[n] == term);
        }
    }
    SUBCASE("r = 1, s = 0 carries no compensating factor") {
        Rational a(1, 3), arg(2, 7);
        auto s = fps_phi_in_t<Rational>({a}, {}, arg, 8, ctx);
        for (int n = 0; n <= 8; ++n) {
            Rational term = Rational(qpoch_finite(a, n, ctx) * pow_int(arg, n));
            term = Rational(term / qpoch_finite(ctx.q(), n, ctx));
            CHECK(s[n] == term);
        }
    }
    SUBCASE("lower parameter q^-m rejected") {
        CHECK_THROWS_AS(fps_phi_in_t<Rational>({Rational(1, 3)}, {Rational(2)},
                                               Rational(1, 5), 4, ctx),
                        InvalidLowerParameter);
    }
}

TEST_CASE("fps_eval") {
    CHECK(fps_eval(TPS<Rational>::constant(Rational(1), 4), Rational(9, 7)) ==
          Rational(1));
    TPS<Rational> f(2);
    f[0] = 1; f[1] = 1; f[2] = 1;
    CHECK(fps_eval(f, Rational(1, 2)) == Rational(7, 4));
}

TEST_CASE("finite q-product polynomials and their reciprocals") {
    auto ctx = exact_ctx();
    Rational c(2, 3);
    for (int m = 0; m <= 4; ++m) {
        auto poly = fps_qpoch_poly(c, m, 10, ctx);
        auto recip = fps_qpoch_recip(c, m, 10, ctx);
        CHECK(poly * recip == TPS<Rational>::constant(Rational(1), 10));
        Rational t0(1, 5);
        CHECK(fps_eval(poly, t0) == qpoch_finite(Rational(c * t0), m, ctx));
    }
}

TEST_CASE("shifted") {
    std::mt19937_64 rng(3);
    auto f = random_series(rng, 8);
    auto g = f.shifted(3);
    CHECK(g[0] == Rational(0));
    CHECK(g[2] == Rational(0));
    for (int n = 3; n <= 8; ++n) CHECK(g[n] == f[n - 3]);
}
