#include "triqfi/criteria.hpp"
#include "triqfi/scan.hpp"

#include <benchmark/benchmark.h>

using namespace triqfi;

static void BM_HermitianEig(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const DensityMatrix rho = random_mixed(DimensionSpec::cubic(d), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(hermitian_eig(rho.matrix));
}
BENCHMARK(BM_HermitianEig)->Arg(2)->Arg(3)->Arg(4);

static void BM_QfiSpectral(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const DensityMatrix rho = random_mixed(DimensionSpec::cubic(d), 2);
    const auto family = gell_mann_family(d);
    for (auto _ : state)
        benchmark::DoNotOptimize(qfi_spectral(rho.matrix, family.front().total));
}
BENCHMARK(BM_QfiSpectral)->Arg(2)->Arg(3)->Arg(4);

static void BM_Corollary1(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const DensityMatrix rho = random_mixed(DimensionSpec::cubic(d), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(corollary1(rho));
}
BENCHMARK(BM_Corollary1)->Arg(2)->Arg(3);

static void BM_CorrelationTensor(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const DensityMatrix rho = random_mixed(DimensionSpec::cubic(d), 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(correlation_tensor(rho, d));
}
BENCHMARK(BM_CorrelationTensor)->Arg(2)->Arg(3);

static void BM_WNoiseScan(benchmark::State& state) {
    auto margin = [](double y) {
        return corollary2(white_noise_mix(w3(), y, DimensionSpec::cubic(2)),
                          SignMode::Example1).margin;
    };
    for (auto _ : state)
        benchmark::DoNotOptimize(scan_threshold(margin, "y", 0.0, 1.0, 1e-6, 2));
}
BENCHMARK(BM_WNoiseScan);

BENCHMARK_MAIN();
