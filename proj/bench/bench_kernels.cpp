#include <benchmark/benchmark.h>

#include <random>

#include "c2inv/f2matrix.hpp"
#include "c2inv/oracle.hpp"

using namespace c2inv;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_PiMatrix(benchmark::State& state)
{
    const auto m = static_cast<std::size_t>(state.range(1));
    const auto d = static_cast<std::size_t>(state.range(2));
    auto basis = GradedBasis::build(m, d);
    PiEvaluator pi(m);
    for (auto _ : state)
        benchmark::DoNotOptimize(pi_matrix(basis, pi, exec_of(state)));
    state.counters["rows"] = double(basis.q_monomials.size());
}

void BM_RrefPi(benchmark::State& state)
{
    const auto m = static_cast<std::size_t>(state.range(1));
    const auto d = static_cast<std::size_t>(state.range(2));
    auto basis = GradedBasis::build(m, d);
    PiEvaluator pi(m);
    const auto a = pi_matrix(basis, pi, Exec::parallel);
    for (auto _ : state) {
        auto copy = a;
        benchmark::DoNotOptimize(rref(copy, exec_of(state)));
    }
    state.counters["cols"] = double(a.cols());
}

void BM_RrefRandom(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(1));
    std::mt19937 rng(1);
    F2Matrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (rng() & 1)
                a.set(r, c);
    for (auto _ : state) {
        auto copy = a;
        benchmark::DoNotOptimize(rref(copy, exec_of(state)));
    }
}

void BM_Verify(benchmark::State& state)
{
    OracleOptions opts;
    opts.exec = exec_of(state);
    const auto m = static_cast<std::size_t>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_second_main(m, 2 * m, Flavor::III, opts).passed());
}

}  // namespace

// first argument: 0 = serial reference, 1 = OpenMP
BENCHMARK(BM_PiMatrix)->ArgNames({"omp", "m", "d"})->ArgsProduct({{0, 1}, {4}, {6, 8}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RrefPi)->ArgNames({"omp", "m", "d"})->ArgsProduct({{0, 1}, {4}, {6, 8}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RrefRandom)->ArgNames({"omp", "n"})->ArgsProduct({{0, 1}, {512, 2048}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Verify)->ArgNames({"omp", "m"})->ArgsProduct({{0, 1}, {3, 4}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
