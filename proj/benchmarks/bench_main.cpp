#include <benchmark/benchmark.h>

#include "hermop/condition_a.hpp"
#include "hermop/diff_ops.hpp"
#include "hermop/howe.hpp"
#include "hermop/local_factors.hpp"
#include "hermop/multipoly.hpp"
#include "hermop/poly_text.hpp"

using namespace hermop;

static void BM_MultiPolyProduct(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    MultiPoly p = MultiPoly::constant(Rat(1));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            p += MultiPoly::variable(var_T(i, j));
    for (auto _ : state) {
        MultiPoly q = p * p * p;
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(BM_MultiPolyProduct)->Arg(2)->Arg(3);

static void BM_OperatorImage(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    MultiPoly p;
    for (int i = 1; i <= n; ++i) p += MultiPoly::variable(var_T(i, i));
    p = p * p * p;
    for (auto _ : state) {
        MultiPoly image = phi_kappa(p, n);
        benchmark::DoNotOptimize(image);
    }
}
BENCHMARK(BM_OperatorImage)->Arg(2)->Arg(3);

static void BM_RewriteRoute(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    MultiPoly p;
    for (int i = 1; i <= n; ++i) p += MultiPoly::variable(var_T(i, i));
    p = p * p * p;
    for (auto _ : state) {
        MultiPoly q = rewrite_Q(p, RewriteMode::plain_kappa);
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(BM_RewriteRoute)->Arg(2)->Arg(3);

static void BM_SolveConditionA(benchmark::State& state) {
    const BlockSpec spec{{1, 1}, static_cast<int>(state.range(0))};
    const std::vector<WeightPair> weights = {{{1}, {1}}, {{1}, {1}}};
    for (auto _ : state) {
        auto basis = solve_condition_A(spec, weights);
        benchmark::DoNotOptimize(basis);
    }
}
BENCHMARK(BM_SolveConditionA)->Arg(2)->Arg(4);

static void BM_SolveSymbolic(benchmark::State& state) {
    const std::vector<WeightPair> weights = {{{1}, {1}}, {{1}, {1}}};
    for (auto _ : state) {
        auto basis = solve_condition_A_symbolic({1, 1}, weights);
        benchmark::DoNotOptimize(basis);
    }
}
BENCHMARK(BM_SolveSymbolic);

static void BM_SatakeLocalFactor(benchmark::State& state) {
    LocalPlaceSpec place;
    place.split_type = SplitType::split;
    place.q = 2;
    place.n2 = static_cast<int>(state.range(0));
    place.chi_P = {GaussRat{Rat(1)}, GaussRat{Rat(1)}};
    place.eigenvalues.assign(2 * place.n2, Rat(1));
    for (int i = 0; i < place.n2; ++i) place.eigenvalues[i] = Rat(i + 1, 2);
    for (auto _ : state) {
        EulerFactor f = satake_local_factor(place);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_SatakeLocalFactor)->Arg(1)->Arg(2);

static void BM_EnumerateDelta(benchmark::State& state) {
    const int boxes = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto family = enumerate_delta(3, 4, boxes);
        benchmark::DoNotOptimize(family);
    }
}
BENCHMARK(BM_EnumerateDelta)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
