#include "vsat/geometry.hpp"
#include "vsat/sampling.hpp"

#include <benchmark/benchmark.h>

using namespace vsat;

namespace {

void BM_Estimate(benchmark::State& st, RuleSpec rule, Axiom axiom, bool parallel)
{
    const int m = static_cast<int>(st.range(0));
    const auto plan = SamplerPlan::ic(m, 1001, 7, 2000);
    for (auto _ : st)
        benchmark::DoNotOptimize(estimate_satisfaction(rule, axiom, plan, {}, parallel).successes);
    st.SetItemsProcessed(st.iterations() * static_cast<long long>(plan.trials));
}

void BM_Activity(benchmark::State& st, bool parallel)
{
    const auto regions = cc_scoring_regions({1, 0, 0});
    const int n = static_cast<int>(st.range(0));
    for (auto _ : st)
        benchmark::DoNotOptimize(activity(regions.c, n, parallel).data());
}

} // namespace

BENCHMARK_CAPTURE(BM_Estimate, borda_cc_serial, RuleSpec::borda(), Axiom::CC, false)->Arg(4)->Arg(6);
BENCHMARK_CAPTURE(BM_Estimate, borda_cc_omp, RuleSpec::borda(), Axiom::CC, true)->Arg(4)->Arg(6);
BENCHMARK_CAPTURE(BM_Estimate, stv_par_serial, RuleSpec::stv(), Axiom::Par, false)->Arg(4);
BENCHMARK_CAPTURE(BM_Estimate, stv_par_omp, RuleSpec::stv(), Axiom::Par, true)->Arg(4);
BENCHMARK_CAPTURE(BM_Activity, serial, false)->Arg(16)->Arg(24);
BENCHMARK_CAPTURE(BM_Activity, omp, true)->Arg(16)->Arg(24);

BENCHMARK_MAIN();
