#include <benchmark/benchmark.h>

#include "frcodes/catalog.hpp"
#include "frcodes/construct.hpp"
#include "frcodes/equivalence.hpp"
#include "frcodes/graph.hpp"
#include "frcodes/repair.hpp"

namespace {

void BM_fill_incidence(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const fr::FrParams params{n, n * n / 4, n / 2, 2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(fr::fill_incidence(params));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_fill_incidence)->RangeMultiplier(2)->Range(16, 128)->Complexity();

void BM_split_graph(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fr::build_regular_graph_split(n, n / 4));
    }
}
BENCHMARK(BM_split_graph)->Arg(16)->Arg(32)->Arg(64);

void BM_canonical_form(benchmark::State& state) {
    const fr::FrParams params{8, 12, 3, 2};
    const fr::FrCode code = fr::matrix_to_code(fr::fill_incidence(params), params);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fr::canonical_form(code));
    }
}
BENCHMARK(BM_canonical_form);

void BM_supported_file_size(benchmark::State& state) {
    const fr::FrCode code = fr::graph_to_fr(fr::circulant_graph(16, 4));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fr::supported_file_size(code, 8));
    }
}
BENCHMARK(BM_supported_file_size);

void BM_generate_catalog(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fr::generate_catalog(n));
    }
}
BENCHMARK(BM_generate_catalog)->Arg(8)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
