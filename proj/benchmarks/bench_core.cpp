#include <benchmark/benchmark.h>

#include "dkpent/pentagon.hpp"
#include "dkpent/rng.hpp"

using namespace dkpent;

static void BM_LyndonBasis(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(freelie::lyndon_words(3, degree));
}
BENCHMARK(BM_LyndonBasis)->Arg(6)->Arg(8)->Arg(10);

static void BM_CombedBracket(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    rng::Gen g(1);
    dkho::CombedLie a = g.combed(4, degree), b = g.combed(4, degree);
    for (auto _ : state) benchmark::DoNotOptimize(dkho::bracket(a, b));
}
BENCHMARK(BM_CombedBracket)->Arg(2)->Arg(3)->Arg(4);

static void BM_PentOfPhi(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    rng::Gen g(2);
    freelie::LieElement phi = g.lie_nonzero(ncalg::xy_alphabet(), degree);
    // Warm the per-degree matrix so the loop measures evaluation only.
    benchmark::DoNotOptimize(pentagon::pent_vec_of_phi(phi, degree));
    for (auto _ : state) benchmark::DoNotOptimize(pentagon::pent_vec_of_phi(phi, degree));
}
BENCHMARK(BM_PentOfPhi)->Arg(4)->Arg(6);

static void BM_SolveDmr0(benchmark::State& state) {
    const int weight = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(pentagon::solve_space(pentagon::System::Dmr0, weight));
}
BENCHMARK(BM_SolveDmr0)->Arg(4)->Arg(5);

BENCHMARK_MAIN();
