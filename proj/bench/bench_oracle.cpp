// Serial reference against the OpenMP kernels of the oracle.

#include "entropic/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace entropic;

namespace {

const Functional cases[] = {
    lag_renyi(6, 200.0, 1.5, 1.0, 2.5),
    geg_renyi(5, 300.0, 0.3, -0.2, 1.0, 2.5, 1.5),
    ext_lag_shannon(8, 400.0, 0.5, 1.0),
};

void run(benchmark::State& state, quadrature::Execution exec)
{
    const Functional& F = cases[state.range(0)];
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::integrate_functional(F, 1e-12, exec).value.log_abs);
    state.SetLabel(kind_name(F.kind));
}

void BM_oracle_serial(benchmark::State& state) { run(state, quadrature::Execution::serial); }
void BM_oracle_parallel(benchmark::State& state) { run(state, quadrature::Execution::parallel); }

} // namespace

BENCHMARK(BM_oracle_serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_oracle_parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
