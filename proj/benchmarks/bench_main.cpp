#include <benchmark/benchmark.h>

#include "vwq/mock_modular.hpp"
#include "vwq/number_theory.hpp"
#include "vwq/partition.hpp"
#include "vwq/series.hpp"
#include "vwq/tautological.hpp"

namespace {

using vwq::FracExpSeries;
using vwq::Rational;

FracExpSeries dense_series(long terms) {
    std::vector<std::pair<Rational, Rational>> t;
    for (long k = 0; k < terms; ++k)
        t.emplace_back(Rational(k), Rational(2 * k + 1, k % 7 + 1));
    return FracExpSeries::from_terms(t, Rational(terms));
}

void BM_series_mul(benchmark::State& state) {
    FracExpSeries a = dense_series(state.range(0));
    FracExpSeries b = dense_series(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(vwq::mul(a, b));
}
BENCHMARK(BM_series_mul)->Arg(64)->Arg(128);

void BM_series_invert(benchmark::State& state) {
    FracExpSeries a = dense_series(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(vwq::invert(a));
}
BENCHMARK(BM_series_invert)->Arg(64)->Arg(128);

void BM_eta_power(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(vwq::eta_power(-3, Rational(state.range(0))));
}
BENCHMARK(BM_eta_power)->Arg(30)->Arg(60);

void BM_hurwitz_sum(benchmark::State& state) {
    for (auto _ : state) {
        Rational acc = 0;
        for (long long d = 0; d <= state.range(0); ++d) acc += vwq::hurwitz(d);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_hurwitz_sum)->Arg(400);

void BM_theta_block(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(vwq::theta_block(static_cast<int>(state.range(0)), 20));
}
BENCHMARK(BM_theta_block)->Arg(2)->Arg(3)->Arg(4);

void BM_monopole_direct(benchmark::State& state) {
    vwq::CurveModel cm(2, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(vwq::monopole_direct(cm, state.range(0)));
}
BENCHMARK(BM_monopole_direct)->Arg(4)->Arg(6)->Arg(8);

void BM_monopole_reduced(benchmark::State& state) {
    vwq::CurveModel cm(6, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(vwq::monopole_reduced(cm, state.range(0)));
}
BENCHMARK(BM_monopole_reduced)->Arg(8)->Arg(12);

void BM_closed_form(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(vwq::closed_form(6, state.range(0)));
}
BENCHMARK(BM_closed_form)->Arg(12)->Arg(24);

void BM_partition_p2(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(vwq::z_vb_p2(1, state.range(0)));
}
BENCHMARK(BM_partition_p2)->Arg(50);

void BM_f0(benchmark::State& state) {
    vwq::UpperHalfPoint tau{1.0 / 3.0, 1.0};
    for (auto _ : state) benchmark::DoNotOptimize(vwq::f0(tau));
}
BENCHMARK(BM_f0);

void BM_sduality_check(benchmark::State& state) {
    vwq::UpperHalfPoint tau{0.25, 1.3};
    for (auto _ : state) benchmark::DoNotOptimize(vwq::check_sduality_p2(tau, 1e-6));
}
BENCHMARK(BM_sduality_check);

}  // namespace

BENCHMARK_MAIN();
