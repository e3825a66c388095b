#include <benchmark/benchmark.h>

#include <qhahn/fps.hpp>
#include <qhahn/identities.hpp>
#include <qhahn/polynomials.hpp>
#include <qhahn/rogers.hpp>

using namespace qhahn;

namespace {

ParameterPoint reference_point() {
    ParameterPoint pt;
    pt.a = Rational(1, 3);
    pt.x = Rational(1, 4);
    pt.y = Rational(1, 5);
    pt.z = Rational(1, 6);
    return pt;
}

void BM_psi_weighted_exact(benchmark::State& state) {
    QContext<Rational> ctx(Rational(1, 2));
    const int n = static_cast<int>(state.range(0));
    Rational a(1, 3), x(1, 4), y(1, 5), z(1, 6);
    for (auto _ : state) {
        auto v = psi_weighted(n, a, x, y, z, ctx);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_psi_weighted_exact)->Arg(8)->Arg(16)->Arg(32);

void BM_psi_weighted_double(benchmark::State& state) {
    QContext<double> ctx(0.5, 512, 1e-12);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        double v = psi_weighted(n, 1.0 / 3, 0.25, 0.2, 1.0 / 6, ctx);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_psi_weighted_double)->Arg(8)->Arg(32);

void BM_fps_mul_rational(benchmark::State& state) {
    QContext<Rational> ctx(Rational(1, 2));
    const int order = static_cast<int>(state.range(0));
    auto f = fps_qprod_infinite(Rational(1, 3), order, ctx);
    auto g = fps_qprod_reciprocal(Rational(1, 5), order, ctx);
    for (auto _ : state) {
        auto h = f * g;
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_fps_mul_rational)->Arg(12)->Arg(24);

void BM_qpoch_infinite_double(benchmark::State& state) {
    QContext<double> ctx(0.5, 512, 1e-12);
    for (auto _ : state) {
        double v = qpoch_infinite(1.0 / 3, ctx);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_qpoch_infinite_double);

void BM_verify_generating_exact(benchmark::State& state) {
    QContext<Rational> ctx(Rational(1, 2));
    auto pt = reference_point();
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto rep = verify_generating(pt, order, ctx, 0.0);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_verify_generating_exact)->Arg(8)->Arg(12);

void BM_verify_rogers(benchmark::State& state) {
    ParameterPoint pt = reference_point();
    pt.x = Rational(1, 5);
    pt.y = Rational(1, 7);
    pt.z = Rational(1, 9);
    pt.s = Rational(1, 4);
    for (auto _ : state) {
        auto rep = verify_rogers(pt, 8, Rational(1, 2), 1e-8);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_verify_rogers);

}  // namespace

BENCHMARK_MAIN();
