// Serial reference vs OpenMP kernels. Args: {n_modes, n_z}; MUSKAT_THREADS caps the team size.

#include <random>

#include <benchmark/benchmark.h>

#include "muskat/estimates.hpp"
#include "muskat/strip.hpp"

using namespace muskat;

namespace {

StripField random_strip(const GridSpec& grid, const ZGrid& zg, std::mt19937_64& rng) {
    StripField f(grid, zg);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int n = 0; n <= grid.n_modes; ++n)
        for (int j = 0; j < zg.n_z; ++j) f.set(n, j, n == 0 ? Complex(u(rng)) : Complex(u(rng), u(rng)));
    return f;
}

Exec exec_of(int flag) { return flag ? Exec::Parallel : Exec::Serial; }

void BM_SolvePoisson(benchmark::State& state) {
    const GridSpec grid = GridSpec::with_modes(static_cast<int>(state.range(0)));
    const ZGrid zg(static_cast<int>(state.range(1)));
    std::mt19937_64 rng(1);
    const StripField g1 = random_strip(grid, zg, rng), g2 = random_strip(grid, zg, rng),
                     f = random_strip(grid, zg, rng);
    const SpectralField h = random_trig(grid, grid.n_modes, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_poisson_strip(g1, g2, f, h, 0.1, exec_of(state.range(2))));
}

void BM_StripMultiply(benchmark::State& state) {
    const GridSpec grid = GridSpec::with_modes(static_cast<int>(state.range(0)));
    const ZGrid zg(static_cast<int>(state.range(1)));
    std::mt19937_64 rng(2);
    const StripField a = random_strip(grid, zg, rng), b = random_strip(grid, zg, rng);
    for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b, exec_of(state.range(2))));
}

void BM_RemainderPotential(benchmark::State& state) {
    const GridSpec grid = GridSpec::with_modes(static_cast<int>(state.range(0)));
    PicardOptions opts;
    opts.zgrid = ZGrid(static_cast<int>(state.range(1)));
    opts.exec = exec_of(state.range(2));
    const SpectralField zeta = SpectralField::trig(grid, {0.0, 0.01}, {0.0, 0.0, 0.004});
    const RegimeParams p = RegimeParams::order_one(0.1, 1.0, 0.5);
    for (auto _ : state)
        benchmark::DoNotOptimize(remainder_potential(zeta, p, RemainderVariant::FirstOrder, opts));
}

void sizes(benchmark::internal::Benchmark* b) {
    b->ArgNames({"modes", "nz", "par"});
    for (int modes : {32, 64})
        for (int nz : {33, 65})
            for (int par : {0, 1}) b->Args({modes, nz, par});
    b->Unit(benchmark::kMicrosecond);
}

}  // namespace

BENCHMARK(BM_SolvePoisson)->Apply(sizes);
BENCHMARK(BM_StripMultiply)->Apply(sizes);
BENCHMARK(BM_RemainderPotential)->Apply(sizes);

BENCHMARK_MAIN();
