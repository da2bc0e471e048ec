#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <vector>

#include "fracdisp/fft.hpp"
#include "fracdisp/heat_kernel.hpp"
#include "fracdisp/profiles.hpp"
#include "fracdisp/solver.hpp"

using namespace fracdisp;

namespace {

RealField bump(const Grid1D& grid) {
    return RealField::sample(grid, [](double x) { return 0.1 * heat_kernel(x, 1.0); });
}

void BM_RealFftRoundTrip(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const RealFft fft(n);
    std::vector<double> x(n), y(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = std::sin(0.1 * static_cast<double>(j));
    std::vector<std::complex<double>> c(fft.spectrum_size());
    for (auto _ : state) {
        fft.forward(x, c);
        fft.backward(c, y);
        benchmark::DoNotOptimize(y.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
}
BENCHMARK(BM_RealFftRoundTrip)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

void BM_NonlinearRhs(benchmark::State& state) {
    const Grid1D grid(500.0, static_cast<std::size_t>(state.range(0)));
    const RealField u = bump(grid);
    const ModelParams p = ModelParams::make(2.0, 3.0);
    for (auto _ : state) benchmark::DoNotOptimize(nonlinear_rhs(u, p));
}
BENCHMARK(BM_NonlinearRhs)->RangeMultiplier(4)->Range(1 << 12, 1 << 15);

void BM_StepperStep(benchmark::State& state) {
    const Grid1D grid(2000.0, static_cast<std::size_t>(state.range(0)));
    SpectralStepper s(ModelParams::make(2.0, 3.0), grid);
    s.load(bump(grid));
    for (auto _ : state) benchmark::DoNotOptimize(s.step(0.05));
}
BENCHMARK(BM_StepperStep)->RangeMultiplier(2)->Range(1 << 13, 1 << 15);

void BM_PsiStar(benchmark::State& state) {
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(psi_star(x));
        x += 1e-3;
    }
}
BENCHMARK(BM_PsiStar);

}  // namespace

BENCHMARK_MAIN();
