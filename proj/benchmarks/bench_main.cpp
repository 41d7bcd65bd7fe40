#include <benchmark/benchmark.h>

#include "wco/expr.hpp"
#include "wco/spectra.hpp"

namespace {

const wco::AnalyticMap& psi() {
    static const wco::AnalyticMap m = wco::parse_symbol("2*exp(z)/(2-z)");
    return m;
}

const wco::AnalyticMap& phi() {
    static const wco::AnalyticMap m = wco::parse_symbol("z/(2-z)");
    return m;
}

void bm_taylor(benchmark::State& state) {
    const int n = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(psi().taylor(n));
    state.SetComplexityN(n);
}
BENCHMARK(bm_taylor)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void bm_wco_matrix(benchmark::State& state) {
    const int n = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(wco::wco_matrix(psi(), phi(), n));
    state.SetComplexityN(n);
}
BENCHMARK(bm_wco_matrix)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void bm_norm_estimate(benchmark::State& state) {
    const int n = int(state.range(0));
    const Eigen::MatrixXcd a = wco::wco_matrix(psi(), phi(), n).matrix;
    for (auto _ : state) benchmark::DoNotOptimize(wco::operator_norm_estimate(a));
}
BENCHMARK(bm_norm_estimate)->RangeMultiplier(2)->Range(32, 512);

void bm_numerical_range(benchmark::State& state) {
    const int n = int(state.range(0));
    const Eigen::MatrixXcd a = wco::wco_matrix(psi(), phi(), n).matrix;
    for (auto _ : state) benchmark::DoNotOptimize(wco::numerical_range(a, 32));
}
BENCHMARK(bm_numerical_range)->RangeMultiplier(2)->Range(32, 128);

}  // namespace

BENCHMARK_MAIN();
