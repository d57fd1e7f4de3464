#include <benchmark/benchmark.h>

#include <numbers>

#include "warpcurv/geometry.hpp"
#include "warpcurv/junction.hpp"
#include "warpcurv/oracle.hpp"
#include "warpcurv/schwarzschild.hpp"

using namespace warpcurv;

namespace {

const Interval kBase{-1.0, 1.0};

MultiplyWarpedSpacetime cosh_exp() {
    std::vector<WarpedFiber> fibers;
    fibers.push_back({FiberSpec{1, 0.0, "x"}, WarpFunction::parse("cosh(t)", kBase)});
    fibers.push_back({FiberSpec{2, 1.0, "S2"}, WarpFunction::parse("exp(t)", kBase)});
    return MultiplyWarpedSpacetime(kBase, std::move(fibers));
}

void BM_ParseWarp(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_warp("piecewise(0; exp(-t^2) * cosh(3*t) + 2; sqrt(4 + t) / (1 + t^2))"));
    }
}
BENCHMARK(BM_ParseWarp);

void BM_EvalJet(benchmark::State& state) {
    const WarpFunction f = WarpFunction::parse("exp(-t^2) * cosh(3*t) + pow(t + 2, t)", kBase);
    double t = -0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_jet(f, t));
        t = t > 0.5 ? -0.5 : t + 1e-3;
    }
}
BENCHMARK(BM_EvalJet);

void BM_RicciComponents(benchmark::State& state) {
    std::vector<WarpedFiber> fibers;
    for (int i = 0; i < state.range(0); ++i) {
        fibers.push_back({FiberSpec{2, 0.0, "F"}, WarpFunction::parse("2 + sin(t + " + std::to_string(i) + ")", kBase)});
    }
    const MultiplyWarpedSpacetime m(kBase, std::move(fibers));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ricci_components(m, 0.3, Side::Auto, {}));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RicciComponents)->RangeMultiplier(2)->Range(1, 32)->Complexity();

void BM_RiemannTensor(benchmark::State& state) {
    const MultiplyWarpedSpacetime m = cosh_exp();
    for (auto _ : state) {
        benchmark::DoNotOptimize(riemann_tensor(m, 0.3, {1.1}, Side::Auto));
    }
}
BENCHMARK(BM_RiemannTensor);

void BM_OracleCurvature(benchmark::State& state) {
    const MultiplyWarpedSpacetime m = cosh_exp();
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::curvature_at(m, 0.3, {1.1}));
    }
}
BENCHMARK(BM_OracleCurvature);

void BM_ShapeOperatorJump(benchmark::State& state) {
    std::vector<WarpedFiber> fibers;
    fibers.push_back({FiberSpec{1, 0.0, "x"}, WarpFunction::parse("piecewise(0; 1 - t; 1 + t)", kBase)});
    fibers.push_back({FiberSpec{2, 1.0, "S2"}, WarpFunction::parse("piecewise(0; cosh(t); exp(t))", kBase)});
    const MultiplyWarpedSpacetime m(kBase, std::move(fibers));
    for (auto _ : state) {
        benchmark::DoNotOptimize(shape_operator_jump(m));
    }
}
BENCHMARK(BM_ShapeOperatorJump);

void BM_NuOfMu(benchmark::State& state) {
    double mu = 0.01;
    for (auto _ : state) {
        benchmark::DoNotOptimize(schwarzschild::nu_of_mu(mu, 1.0));
        mu = mu > 3.1 ? 0.01 : mu + 0.01;
    }
}
BENCHMARK(BM_NuOfMu);

void BM_VerifyRicciFlat(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(schwarzschild::verify_ricci_flat({1.0, 50}));
    }
}
BENCHMARK(BM_VerifyRicciFlat);

} // namespace

BENCHMARK_MAIN();
