#include <benchmark/benchmark.h>

#include "ainfty/catalog.hpp"
#include "ainfty/certify.hpp"
#include "ainfty/hochschild.hpp"
#include "ainfty/obstruction.hpp"
#include "ainfty/resolutions.hpp"

using namespace ainfty;

static void BM_CheckStructureGlued(benchmark::State& state) {
    const int arity = static_cast<int>(state.range(0));
    SolveOutcome sol = solve_to_arity(6, 12, 8);
    AInftyAlgebra B = glue(bimodule_from_prefix(sol.prefix, 7, "V"), "B10");
    for (auto _ : state) {
        CheckReport rep = check_structure(B, arity);
        benchmark::DoNotOptimize(rep.pass);
    }
}
BENCHMARK(BM_CheckStructureGlued)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_SolveMorphism(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SolveOutcome out = solve_to_arity(N, 12, 8);
        benchmark::DoNotOptimize(out.success);
    }
}
BENCHMARK(BM_SolveMorphism)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_HochschildSlice(benchmark::State& state) {
    AlgebraPtr A = make_algebra_ptr("tensor(lambda1,dual_numbers)");
    const int w = static_cast<int>(state.range(0));
    for (auto _ : state) {
        HochschildSlice S = hochschild_slice(A, w);
        HomologyReport H = homology_of_slice(S.complex);
        benchmark::DoNotOptimize(H.total_dim());
    }
}
BENCHMARK(BM_HochschildSlice)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_CohomologyOfC(benchmark::State& state) {
    const int W = static_cast<int>(state.range(0));
    AlgebraPtr C = make_algebra_ptr("free_C(" + std::to_string(W) + ")");
    for (auto _ : state) {
        CohomologyOfC coh = cohomology_of_C(C);
        benchmark::DoNotOptimize(coh.report.pass);
    }
}
BENCHMARK(BM_CohomologyOfC)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_PeriodicResolution(benchmark::State& state) {
    for (auto _ : state) {
        PeriodicResolution R = build_periodic_resolution(6, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(R.pass);
    }
}
BENCHMARK(BM_PeriodicResolution)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
