#include <benchmark/benchmark.h>

#include "congruent/descent.hpp"
#include "congruent/survey.hpp"

using namespace congruent;

namespace {

// T^(phi)(2) for k = 17 * 1361 has no point, so the whole box is scanned.
const Torsor& empty_torsor() {
    static const Torsor t = Torsor::make(CurvePair::make(17 * 1361), Isogeny::phi, 2);
    return t;
}

void BM_SearchParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(search_points(empty_torsor(), static_cast<u64>(state.range(0))));
}

void BM_SearchSerial(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(search_points_serial(empty_torsor(), static_cast<u64>(state.range(0))));
}

FamilySpec plus_family(u64 bound) {
    FamilySpec s;
    s.legendre = 1;
    s.bound = bound;
    return s;
}

void BM_SurveyParallel(benchmark::State& state) {
    const FamilySpec s = plus_family(static_cast<u64>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(run_survey(s));
}

void BM_SurveySerial(benchmark::State& state) {
    const FamilySpec s = plus_family(static_cast<u64>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(run_survey_serial(s));
}

}  // namespace

BENCHMARK(BM_SearchParallel)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SearchSerial)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SurveyParallel)->Arg(3000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SurveySerial)->Arg(3000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
