#include <benchmark/benchmark.h>

#include <random>

#include "skewhopf/catalog.hpp"
#include "skewhopf/hopf.hpp"

using namespace skewhopf;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(1) ? Exec::parallel : Exec::serial; }

Matrix random_matrix(size_t n) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> d(-4, 4);
    Matrix m(rationals(), n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m(i, j) = Scalar(d(rng));
    return m;
}

void row_reduce_kernel(benchmark::State& st) {
    Matrix m = random_matrix(static_cast<size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(row_reduce(m, exec_of(st)));
}

void associator_kernel(benchmark::State& st) {
    int n = static_cast<int>(st.range(0));
    Field F = cyclotomic(n);
    HopfData H = tensor_hopf(taft(n, root_of_unity(F, n)), group_algebra(cyclic_group(2), F));
    for (auto _ : st) benchmark::DoNotOptimize(associator_scan(H.alg, exec_of(st)));
}

void hopf_kernel(benchmark::State& st) {
    HopfData H = tensor_hopf(sweedler(), group_algebra(cyclic_group(static_cast<int>(st.range(0)))));
    for (auto _ : st) benchmark::DoNotOptimize(check_hopf(H, exec_of(st)));
}

}  // namespace

BENCHMARK(row_reduce_kernel)->ArgsProduct({{16, 32, 48}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(associator_kernel)->ArgsProduct({{2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(hopf_kernel)->ArgsProduct({{2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
