// Serial reference paths against the OpenMP kernels.
// Run with MACROREAL_THREADS=<n> to pin the worker count.

#include <benchmark/benchmark.h>

#include "macroreal/montecarlo.hpp"
#include "macroreal/optimize.hpp"
#include "macroreal/oracle.hpp"

using namespace macroreal;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void label(benchmark::State& state) {
    state.SetLabel(state.range(0) ? "parallel x" + std::to_string(worker_count()) : "serial");
}

void BM_GridSearchCatalog(benchmark::State& state) {
    const SpecBatch batch(wlgi3_catalog());
    const auto thetas = theta_axis(181);
    const std::vector<double> phis{kPi / 2, 3 * kPi / 2};
    const auto taus = tau_axis(629);
    for (auto _ : state) {
        benchmark::DoNotOptimize(grid_search(batch, 0.75, thetas, phis, taus, exec_of(state)));
    }
    label(state);
}
BENCHMARK(BM_GridSearchCatalog)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ClassicalMax(benchmark::State& state) {
    const InequalitySpec spec = wlgi_n(20);
    for (auto _ : state) benchmark::DoNotOptimize(classical_max(spec, exec_of(state)));
    label(state);
}
BENCHMARK(BM_ClassicalMax)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SampleSequences(benchmark::State& state) {
    const TrajectoryConfig config{{3, 1.0083, 0.8, 1.0666, kPi / 2}, {1, 2, 3}, 1000000, 1, 0};
    for (auto _ : state) benchmark::DoNotOptimize(sample_sequences(config, exec_of(state)));
    label(state);
}
BENCHMARK(BM_SampleSequences)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
    apply_thread_env();
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
