#include <benchmark/benchmark.h>

#include <vector>

#include "ivqrof/hamacher.hpp"
#include "ivqrof/heronian.hpp"
#include "ivqrof/oracle.hpp"
#include "ivqrof/random_cases.hpp"

namespace {

using namespace ivqrof;

struct Inputs {
  std::vector<IVqROFN> values;
  WeightVector weights = WeightVector::uniform(1);
  AggParams params{3, 3, 3, 3};
};

Inputs make_inputs(std::size_t n) {
  CaseGenerator gen(n);
  Inputs in;
  in.values = gen.numbers(n, 3);
  in.weights = gen.weights(n);
  return in;
}

void BM_HSum(benchmark::State& state) {
  CaseGenerator gen(1);
  const IVqROFN a = gen.number(3);
  const IVqROFN b = gen.number(3);
  const AggParams p{3, 3, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(h_sum(a, b, p));
}
BENCHMARK(BM_HSum);

void BM_HScalarMul(benchmark::State& state) {
  CaseGenerator gen(2);
  const IVqROFN a = gen.number(3);
  const AggParams p{3, 3, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(h_scalar_mul(0.37, a, p));
}
BENCHMARK(BM_HScalarMul);

template <Operator Op>
void BM_ClosedForm(benchmark::State& state) {
  const Inputs in = make_inputs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    if constexpr (Op == Operator::Hmm) {
      benchmark::DoNotOptimize(hmm(in.values, in.params));
    } else if constexpr (Op == Operator::Hhmwa) {
      benchmark::DoNotOptimize(hhmwa(in.values, in.weights, in.params));
    } else {
      benchmark::DoNotOptimize(hhmga(in.values, in.weights, in.params));
    }
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK_TEMPLATE(BM_ClosedForm, Operator::Hmm)->RangeMultiplier(2)->Range(1, 32)->Complexity();
BENCHMARK_TEMPLATE(BM_ClosedForm, Operator::Hhmwa)->RangeMultiplier(2)->Range(1, 32)->Complexity();
BENCHMARK_TEMPLATE(BM_ClosedForm, Operator::HhmgaDual)->RangeMultiplier(2)->Range(1, 32)->Complexity();

void BM_Fold(benchmark::State& state, Operator op, FoldPrecision precision) {
  const Inputs in = make_inputs(static_cast<std::size_t>(state.range(0)));
  FoldSpec spec{op, in.values, std::nullopt, in.params};
  if (op != Operator::Hmm) spec.weights = in.weights;
  for (auto _ : state) benchmark::DoNotOptimize(fold_eval(spec, precision));
  state.SetComplexityN(state.range(0));
}
BENCHMARK_CAPTURE(BM_Fold, hmm_extended, Operator::Hmm, FoldPrecision::Extended)
    ->RangeMultiplier(2)->Range(1, 32)->Complexity();
BENCHMARK_CAPTURE(BM_Fold, hmm_double, Operator::Hmm, FoldPrecision::Double)
    ->RangeMultiplier(2)->Range(1, 32)->Complexity();
BENCHMARK_CAPTURE(BM_Fold, hhmwa_extended, Operator::Hhmwa, FoldPrecision::Extended)
    ->RangeMultiplier(2)->Range(1, 32)->Complexity();

void BM_HmmPhi1(benchmark::State& state) {
  const Inputs in = make_inputs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hmm_phi1(in.values, 3, 3, 3));
}
BENCHMARK(BM_HmmPhi1)->Arg(5)->Arg(20);

}  // namespace
