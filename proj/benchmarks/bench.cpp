#include <benchmark/benchmark.h>

#include "gqpieri/enumerate.hpp"
#include "gqpieri/pieri.hpp"
#include "gqpieri/verify.hpp"

using namespace gqpieri;

namespace {

void BM_EnumerateTrapezoid(benchmark::State& state) {
    SignedPermutation target =
        extended_grassmannian(StrictPartition({2, 1}), 3, 3, 2);
    StrictPartition mu({5, 4, 3});
    for (auto _ : state) {
        auto report = enumerate_sdt({mu, target});
        benchmark::DoNotOptimize(report.count);
    }
}
BENCHMARK(BM_EnumerateTrapezoid);

void BM_SdtCountPieri(benchmark::State& state) {
    StrictPartition mu({6, 3, 1}), lambda({5, 1});
    for (auto _ : state) {
        auto count = sdt_count_pieri(mu, lambda, 4);
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_SdtCountPieri);

void BM_PieriExpansion(benchmark::State& state) {
    StrictPartition lambda({5, 3, 1});
    for (auto _ : state) {
        auto expansion = pieri_expansion(lambda, 4);
        benchmark::DoNotOptimize(expansion.terms.size());
    }
}
BENCHMARK(BM_PieriExpansion);

void BM_TheoremSweepSmall(benchmark::State& state) {
    SweepConfig config;
    config.max_part = 3;
    config.max_len = 2;
    config.max_p = 3;
    for (auto _ : state) {
        auto report = check_theorem(config);
        benchmark::DoNotOptimize(report.checked);
    }
}
BENCHMARK(BM_TheoremSweepSmall);

}  // namespace

BENCHMARK_MAIN();
