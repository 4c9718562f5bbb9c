#include <wgqed/general_solution.hpp>
#include <wgqed/spontaneous.hpp>

#include <benchmark/benchmark.h>

using namespace wgqed;

namespace {

const SystemParams params = make_params(1.0, -0.03, 0.02, 1.5, 1.0, [](std::string_view) {});

void BM_SpontaneousGamma(benchmark::State &state) {
    double x = 10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gamma_spontaneous(x, 40.0, 100.0, params));
        x = x < 90.0 ? x + 0.37 : 10.0;
    }
}
BENCHMARK(BM_SpontaneousGamma);

// One upper-state amplitude needs a single adaptive convolution over the pulse.
void BM_PulseAlpha(benchmark::State &state) {
    const double sigma = 25.0;
    const GeneralSolution g(params, 0.0, PulseSpec::gaussian(-6 * sigma, sigma, params.delta_omega(), 1.0));
    double t = 100.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(g.alpha(t));
        t = t < 300.0 ? t + 1.3 : 100.0;
    }
}
BENCHMARK(BM_PulseAlpha);

void BM_PulseGamma(benchmark::State &state) {
    const double sigma = 25.0;
    const GeneralSolution g(params, 0.0, PulseSpec::gaussian(-6 * sigma, sigma, params.delta_omega(), 1.0));
    for (auto _ : state) benchmark::DoNotOptimize(g.gamma(120.0, 200.0, 300.0));
}
BENCHMARK(BM_PulseGamma);

} // namespace
