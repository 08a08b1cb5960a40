#include <benchmark/benchmark.h>

#include "aspnf/cycles.hpp"
#include "aspnf/generators.hpp"
#include "aspnf/normalize.hpp"
#include "aspnf/semantics.hpp"

using namespace aspnf;

namespace {

void BM_SolveK3(benchmark::State& state) {
  const Program p = encode_3col(UndirectedGraph::complete(3));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_answer_sets(p));
}
BENCHMARK(BM_SolveK3)->Unit(benchmark::kMillisecond);

void BM_SolvePath(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const Program p = encode_3col(UndirectedGraph::path(n));
  const EnumerationOptions opts{.max_atoms = 64};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_answer_sets(p, opts));
}
BENCHMARK(BM_SolvePath)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Gamma(benchmark::State& state) {
  const Program p = encode_3col(UndirectedGraph::complete(4));
  const AtomSet s = p.atoms();
  for (auto _ : state) benchmark::DoNotOptimize(gamma(p, s));
}
BENCHMARK(BM_Gamma);

void BM_WellFounded(benchmark::State& state) {
  const Program p = encode_3col(UndirectedGraph::complete(4));
  for (auto _ : state) benchmark::DoNotOptimize(well_founded(p));
}
BENCHMARK(BM_WellFounded);

void BM_FindCycles(benchmark::State& state) {
  const Program p = random_kernel_program(static_cast<std::size_t>(state.range(0)), 2 * state.range(0), 3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(find_cycles(p));
}
BENCHMARK(BM_FindCycles)->Arg(6)->Arg(8)->Arg(10);

void BM_ThreeKernelize(benchmark::State& state) {
  const Program p = random_kernel_program(8, 10, 3, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(three_kernelize(p));
}
BENCHMARK(BM_ThreeKernelize)->Arg(1)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
