#include "schmidt/congruence.hpp"
#include "schmidt/extension.hpp"
#include "schmidt/linearizer.hpp"
#include "schmidt/schmidt.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace schmidt;

static void BM_WeightedSum(benchmark::State& state) {
  const SchmidtParams p{static_cast<unsigned>(state.range(0)), 2, static_cast<unsigned>(state.range(1)),
                        Sign::plus, 0};
  for (auto _ : state) benchmark::DoNotOptimize(weighted_sum(p, Weight::plain));
}
BENCHMARK(BM_WeightedSum)->Args({10, 2})->Args({25, 2})->Args({25, 3});

static void BM_BTable(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  const auto r = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(b_table(m, r));
}
BENCHMARK(BM_BTable)->Args({3, 3})->Args({6, 5})->Args({12, 6});

static void BM_TupleLinearize(benchmark::State& state) {
  std::vector<unsigned> indices(static_cast<std::size_t>(state.range(0)), 4);
  for (std::size_t i = 0; i < indices.size(); ++i) indices[i] += static_cast<unsigned>(i);
  BTableCache cache;
  for (auto _ : state) benchmark::DoNotOptimize(tuple_linearize(indices, 2, &cache));
}
BENCHMARK(BM_TupleLinearize)->Arg(1)->Arg(2)->Arg(3);

static void BM_TheoremCheck(benchmark::State& state) {
  const SchmidtParams p{static_cast<unsigned>(state.range(0)), 3, 3, Sign::minus, 0};
  for (auto _ : state) benchmark::DoNotOptimize(theorem_check(p, {.keep_terms = false}));
}
BENCHMARK(BM_TheoremCheck)->Arg(10)->Arg(25);

static void BM_ConstructiveSum(benchmark::State& state) {
  const SchmidtParams p{static_cast<unsigned>(state.range(0)), 2, 2, Sign::plus, 0};
  BTableCache cache;
  for (auto _ : state) benchmark::DoNotOptimize(constructive_weighted_sum(p, &cache));
}
BENCHMARK(BM_ConstructiveSum)->Arg(8)->Arg(15);

static void BM_CTable(benchmark::State& state) {
  const auto a = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(c_table(5, a));
}
BENCHMARK(BM_CTable)->Arg(2)->Arg(5)->Arg(10);
BENCHMARK_MAIN();
