#include <benchmark/benchmark.h>

#include <string>

#include "ivqrof/cli_io.hpp"

namespace {

using namespace ivqrof;

const std::string kFixture = std::string(IVQROF_FIXTURE_DIR) + "/case_study.json";

void BM_ParseCaseStudy(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(load_problem(kFixture));
}
BENCHMARK(BM_ParseCaseStudy);

void BM_SolveCaseStudy(benchmark::State& state) {
  const DecisionProblem problem = load_problem(kFixture);
  for (auto _ : state) benchmark::DoNotOptimize(solve(problem));
}
BENCHMARK(BM_SolveCaseStudy);

void BM_SweepRung(benchmark::State& state) {
  SweepSpec spec;
  spec.param = SweepParam::Q;
  spec.values = {3, 4, 5, 6};
  spec.base = load_problem(kFixture);
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec));
}
BENCHMARK(BM_SweepRung);

void BM_Selfcheck(benchmark::State& state) {
  const SelfcheckOptions opts{static_cast<std::size_t>(state.range(0)), 42};
  for (auto _ : state) benchmark::DoNotOptimize(run_selfcheck(opts));
}
BENCHMARK(BM_Selfcheck)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
