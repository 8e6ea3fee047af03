#include "derange/analysis.hpp"
#include "derange/families.hpp"
#include "derange/signed_permutation.hpp"
#include "derange/simplicial.hpp"

#include <benchmark/benchmark.h>

using namespace derange;

static void BM_SignedEnumerationScan(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long count = 0;
        for_each_bn(n, [&](const SignedPermutation& w) {
            if (w.is_derangement_b()) count += w.exc_b();
        });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_SignedEnumerationScan)->Arg(5)->Arg(6);

static void BM_FamilyFormulaOnly(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        FamilyCalculator::Options o;
        o.enum_max_a = 0;
        o.enum_max_b = 0;
        FamilyCalculator calc(o);
        benchmark::DoNotOptimize(calc.value(Family::FPlus, n));
    }
}
BENCHMARK(BM_FamilyFormulaOnly)->Arg(8)->Arg(10)->Arg(12);

static void BM_EgfExpansion(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(egf_derangement_b(order));
}
BENCHMARK(BM_EgfExpansion)->Arg(6)->Arg(10);

static void BM_IntervalSubdivisionLocalH(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    KnComplex kn = k_n(n);
    for (auto _ : state) benchmark::DoNotOptimize(local_h(kn.over_simplex));
}
BENCHMARK(BM_IntervalSubdivisionLocalH)->Arg(3)->Arg(4)->Arg(5);

static void BM_SturmRealRooted(benchmark::State& state) {
    FamilyCalculator calc;
    IntPoly p = calc.value(Family::BPlus, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sturm_real_rooted(p));
}
BENCHMARK(BM_SturmRealRooted)->Arg(6)->Arg(10);

BENCHMARK_MAIN();
