#include <benchmark/benchmark.h>

#include <complex>

#include "twocrit/boettcher.hpp"
#include "twocrit/family.hpp"
#include "twocrit/orbit.hpp"
#include "twocrit/render.hpp"
#include "twocrit/resultant.hpp"

namespace {

using namespace twocrit;

void BM_EvalMap(benchmark::State& state) {
    const FamilyParams p(2, 1, std::complex<double>(0.7, 0.2));
    ExtComplex z(0.31, 0.17);
    for (auto _ : state) {
        benchmark::DoNotOptimize(z = eval_map(p, z));
        if (z.at_infinity || z.abs() < 1e-12) z = ExtComplex(0.31, 0.17);
    }
}
BENCHMARK(BM_EvalMap);

void BM_ClassifyParameter(benchmark::State& state) {
    const TrapDisc trap = trap_disc(2, 1);
    const CriticalData cd = critical_data(2, 1);
    double phase = 0.0;
    for (auto _ : state) {
        phase += 0.01;
        const FamilyParams p(2, 1, std::polar(0.6, phase));
        benchmark::DoNotOptimize(classify_parameter(p, 2000, trap, cd));
    }
}
BENCHMARK(BM_ClassifyParameter);

void BM_GreenZero(benchmark::State& state) {
    const FamilyParams p(2, 1, std::complex<double>(0.9, 0.0));
    const ExtComplex z(0.05, 0.02);
    for (auto _ : state) benchmark::DoNotOptimize(green_zero(p, z));
}
BENCHMARK(BM_GreenZero);

void BM_BoettcherCoordinate(benchmark::State& state) {
    const FamilyParams p(2, 1, std::complex<double>(0.9, 0.0));
    const ExtComplex z(0.05, 0.02);
    for (auto _ : state) benchmark::DoNotOptimize(boettcher_coordinate(p, z));
}
BENCHMARK(BM_BoettcherCoordinate);

void BM_MultiplierCurve(benchmark::State& state) {
    const int m = (int)state.range(0);
    const int n = (int)state.range(1);
    for (auto _ : state) benchmark::DoNotOptimize(multiplier_curve(m, n));
}
BENCHMARK(BM_MultiplierCurve)->Args({2, 1})->Args({3, 2})->Args({4, 3});

void BM_RenderParameterPlane(benchmark::State& state) {
    const int px = (int)state.range(0);
    const ViewRect view{{0.0, 0.0}, 5.0, 5.0};
    const PaletteSpec pal = default_parameter_palette();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            render_parameter_plane(2, 1, view, px, px, 500, pal, 1));
    }
    state.SetComplexityN(px);
}
BENCHMARK(BM_RenderParameterPlane)->Arg(32)->Arg(64)->Arg(128)->Complexity();

}  // namespace

BENCHMARK_MAIN();
