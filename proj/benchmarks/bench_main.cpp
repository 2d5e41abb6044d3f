#include <benchmark/benchmark.h>

#include "graphcodes/codes.hpp"
#include "graphcodes/eulerian3.hpp"
#include "graphcodes/graph.hpp"
#include "graphcodes/toric.hpp"

using namespace graphcodes;

namespace {

void BM_Parameterize(benchmark::State& state) {
  const auto f = Field::make(static_cast<int>(state.range(1)));
  const auto g = family::complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(parameterize(g, f).size());
}
BENCHMARK(BM_Parameterize)->Args({4, 5})->Args({5, 5})->Args({5, 7})->Unit(benchmark::kMillisecond);

void BM_Dimension(benchmark::State& state) {
  const auto f = Field::make(5);
  const auto x = parameterize(family::complete_bipartite(3, 3), f);
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dimension(x, d));
}
BENCHMARK(BM_Dimension)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_Rank(benchmark::State& state) {
  const auto f = Field::make(7);
  const auto x = parameterize(family::cycle(6), f);
  const auto m = evaluation_matrix(x, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m, f));
}
BENCHMARK(BM_Rank)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_MinDistExhaustive(benchmark::State& state) {
  const auto f = Field::make(5);
  const auto code = make_code(parameterize(family::complete_bipartite(2, 3), f), static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(minimum_distance(code.generator, f, kDefaultBudget, MinDistMethod::Exhaustive).distance);
}
BENCHMARK(BM_MinDistExhaustive)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MinDistInformationSet(benchmark::State& state) {
  const auto f = Field::make(5);
  const auto code = make_code(parameterize(family::cycle(6), f), 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(minimum_distance(code.generator, f, kDefaultBudget, MinDistMethod::InformationSet).distance);
}
BENCHMARK(BM_MinDistInformationSet)->Unit(benchmark::kMillisecond);

void BM_TernaryDimension(benchmark::State& state) {
  const auto g = family::complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dim_ternary(g, 2));
}
BENCHMARK(BM_TernaryDimension)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
