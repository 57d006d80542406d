#include <benchmark/benchmark.h>

#include <cstddef>
#include <string>

#include "qcs/cyclic_bounds.hpp"
#include "qcs/digraph.hpp"
#include "qcs/funceq.hpp"
#include "qcs/gp.hpp"
#include "qcs/maxsum.hpp"
#include "qcs/minsum.hpp"
#include "qcs/sums.hpp"

namespace {

void BM_Girth(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = qcs::circulant(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(qcs::girth(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Girth)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_MinsumExact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = qcs::circulant(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(qcs::minsum_exact(g).report.value);
}
BENCHMARK(BM_MinsumExact)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_MaxsumInfimum(benchmark::State& state) {
  const auto g = qcs::circulant(static_cast<std::size_t>(state.range(0)), 12);
  for (auto _ : state) benchmark::DoNotOptimize(qcs::maxsum_infimum(g).value);
}
BENCHMARK(BM_MaxsumInfimum)->Arg(40)->Arg(400);

void BM_ShallitMinimize(benchmark::State& state) {
  const auto spec = qcs::build_quotient_sum(
      qcs::shallit_graph(static_cast<std::size_t>(state.range(0))), qcs::Pin{0, 1.0});
  for (auto _ : state) benchmark::DoNotOptimize(qcs::minimize(spec).value);
}
BENCHMARK(BM_ShallitMinimize)->RangeMultiplier(2)->Range(5, 80);

void BM_BuildFTable(benchmark::State& state) {
  const auto limit = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qcs::build_F_table(limit, 1e-6).values().size());
}
BENCHMARK(BM_BuildFTable)->Arg(100)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_StaircaseF(benchmark::State& state) {
  const auto x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qcs::staircase_F(x).value);
}
BENCHMARK(BM_StaircaseF)->Arg(10)->Arg(2022)->Unit(benchmark::kMicrosecond);

void BM_DianandaFinite(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcs::minimize_diananda(n, 2, qcs::PowerOrder{1.0}).report.value);
  }
}
BENCHMARK(BM_DianandaFinite)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
