#include <wgqed/oracle.hpp>

#include <benchmark/benchmark.h>

using namespace wgqed;

namespace {

// Full spontaneous run over one upper-state lifetime; cost grows as n_modes^2.
void BM_OracleLifetime(benchmark::State &state) {
    const auto p = make_params(1.0, -0.03, 0.02, 1.5, 1.0, [](std::string_view) {});
    OracleConfig cfg;
    cfg.n_modes = static_cast<std::size_t>(state.range(0));
    cfg.t_max = 1.0 / p.gamma2();
    cfg.stride = 1 << 20;
    std::size_t steps = 0;
    for (auto _ : state) {
        const auto traj = run_oracle(p, cfg);
        benchmark::DoNotOptimize(traj.final_gamma.data());
        steps += traj.steps;
    }
    const double states = 0.5 * state.range(0) * (state.range(0) + 1.0);
    state.counters["state_steps/s"] = benchmark::Counter(states * steps, benchmark::Counter::kIsRate);
}
BENCHMARK(BM_OracleLifetime)->Arg(201)->Arg(401)->Arg(801)->Unit(benchmark::kMillisecond);

} // namespace
