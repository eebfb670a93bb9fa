#include <benchmark/benchmark.h>

#include "zetalogic/zeta.hpp"

namespace {

using zetalogic::Complex;

void DirichletPartial(benchmark::State& state) {
    const Complex s(2.0, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            zetalogic::dirichlet_partial(s, static_cast<std::uint64_t>(state.range(0))));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(DirichletPartial)->Range(1 << 10, 1 << 20)->Complexity();

void EulerProductPartial(benchmark::State& state) {
    const Complex s(2.0, 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(zetalogic::euler_product_partial(
            s, static_cast<std::uint64_t>(state.range(0))));
    }
}
BENCHMARK(EulerProductPartial)->Range(1 << 10, 1 << 17);

void EtaDirect(benchmark::State& state) {
    const Complex s(2.5, 0.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(zetalogic::eta_zeta(s, 1e-10));
    }
}
BENCHMARK(EtaDirect);

void EtaAccelerated(benchmark::State& state) {
    const Complex s(0.5, 3.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(zetalogic::eta_zeta(s, 1e-12));
    }
}
BENCHMARK(EtaAccelerated);

void EulerMaclaurin(benchmark::State& state) {
    const Complex s(-1.5, 8.0);
    const zetalogic::EmParams params{static_cast<int>(state.range(0)),
                                     static_cast<int>(state.range(1))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(zetalogic::em_zeta(s, params));
    }
}
BENCHMARK(EulerMaclaurin)->Args({5, 20})->Args({8, 40})->Args({12, 80});

void BernoulliExact(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            zetalogic::bernoulli_number(static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BernoulliExact)->Arg(12)->Arg(60)->Arg(120);

void RegionMapGrid(benchmark::State& state) {
    const zetalogic::GridSpec grid{-3.0, 3.0, static_cast<int>(state.range(0)),
                                   -10.0, 10.0, static_cast<int>(state.range(0)) / 2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            zetalogic::region_map(grid, zetalogic::ZetaMethod::Eta));
    }
}
BENCHMARK(RegionMapGrid)->Arg(100)->Arg(400);

void GammaLanczos(benchmark::State& state) {
    const Complex s(3.7, -2.2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(zetalogic::gamma(s));
    }
}
BENCHMARK(GammaLanczos);

}  // namespace
