#include <wgqed/spectrum.hpp>

#include <benchmark/benchmark.h>

using namespace wgqed;

namespace {

const SystemParams params = make_params(1.0, -0.03, 0.02, 3.0, 1.0, [](std::string_view) {});

void BM_SpectrumGrid(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto g = spectrum_grid({0.95, 1.02}, {0.95, 1.02}, n, n, params);
        benchmark::DoNotOptimize(g.values.data());
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_SpectrumGrid)->Arg(101)->Arg(501);

void BM_FindPeaks(benchmark::State &state) {
    const auto g = spectrum_grid({0.95, 1.02}, {0.95, 1.02}, 501, 501, params);
    for (auto _ : state) benchmark::DoNotOptimize(find_peaks(g).peaks.size());
}
BENCHMARK(BM_FindPeaks);

void BM_SpectrumNorm(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(spectrum_norm(params, 300 * params.gamma1()).value);
}
BENCHMARK(BM_SpectrumNorm)->Unit(benchmark::kMillisecond);

} // namespace
