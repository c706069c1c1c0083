#include "hardy/chirp.hpp"
#include "hardy/experiments.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace {

std::vector<std::complex<double>> random_coeffs(std::size_t n) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<std::complex<double>> c(n);
    for (auto& z : c) {
        z = {u(rng), u(rng)};
    }
    return c;
}

void BM_ChirpSum(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    const auto c = random_coeffs(n);
    for (auto _ : state) {
        auto s = hardy::chirp_sum(c, 0.5e-3, 1e-3, 0.0, 0.37, n);
        benchmark::DoNotOptimize(s.data());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_ChirpSum)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_DirectSum(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    const auto c = random_coeffs(n);
    for (auto _ : state) {
        std::vector<std::complex<double>> s(n);
        for (int k = 0; k < n; ++k) {
            std::complex<double> acc = 0.0;
            for (int j = 0; j < n; ++j) {
                acc += c[j] * std::polar(1.0, -(0.37 * k) * (0.5e-3 + 1e-3 * j));
            }
            s[k] = acc;
        }
        benchmark::DoNotOptimize(s.data());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_DirectSum)->RangeMultiplier(4)->Range(64, 1024)->Complexity();

void BM_BuildDensity(benchmark::State& state) {
    const auto w = hardy::Weight::single_exponential(2.0, 1.0);
    hardy::DesignConfig cfg;
    cfg.N = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto t = hardy::build_density(w, cfg);
        benchmark::DoNotOptimize(t.nu.data());
    }
}
BENCHMARK(BM_BuildDensity)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Evaluate(benchmark::State& state) {
    const auto w = hardy::Weight::single_exponential(2.0, 1.0);
    hardy::DesignConfig cfg;
    cfg.N = static_cast<int>(state.range(0));
    const auto r = hardy::run_design(w, cfg);
    const auto app = hardy::build_approximant([](double x) { return 1.0 / std::cosh(2.0 * x); },
                                              r.points, w, cfg.d);
    double x = -3.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hardy::evaluate(app, x));
        x = x > 3.0 ? -3.0 : x + 1e-3;
    }
}
BENCHMARK(BM_Evaluate)->Arg(10)->Arg(100);

void BM_CompareCase1(benchmark::State& state) {
    auto spec = hardy::make_case(hardy::CaseId::SE);
    spec.N_list = {static_cast<int>(state.range(0))};
    for (auto _ : state) {
        auto r = hardy::run_compare(spec, 1);
        benchmark::DoNotOptimize(r.rows.data());
    }
}
BENCHMARK(BM_CompareCase1)->Arg(30)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
