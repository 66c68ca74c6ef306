#include "qtor/characters.hpp"
#include "qtor/gz.hpp"
#include "qtor/macmahon.hpp"
#include "qtor/verify.hpp"

#include <benchmark/benchmark.h>

using namespace qtor;

static void BM_EnumerateVacuum(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_pp(BoundaryTriple{}, d));
}
BENCHMARK(BM_EnumerateVacuum)->DenseRange(6, 12, 3);

static void BM_EnumerateBoundary(benchmark::State& state) {
  BoundaryTriple b = BoundaryTriple::parse("(2,1);(1);(1)");
  for (auto _ : state) benchmark::DoNotOptimize(count_pp(b, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateBoundary)->Arg(8);

static void BM_RelationSuiteVacuum(benchmark::State& state) {
  SuiteOptions opt;
  opt.max_degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    MacmahonModule m(BoundaryTriple{}, make_generic_params(1));
    EvaluatedModule ev(m);
    benchmark::DoNotOptimize(run_relation_suite(ev, opt));
  }
}
BENCHMARK(BM_RelationSuiteVacuum)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_TheoremCharacter(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(theorem_character({2, 1}, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TheoremCharacter)->Arg(8)->Arg(16);

static void BM_HookCharacter(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hook_character({2, 1}, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HookCharacter)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_GlinfRelations(benchmark::State& state) {
  GZCheckOptions opt;
  opt.max_deviation = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_glinf_relations(2, Partition{1}, Partition{}, opt));
}
BENCHMARK(BM_GlinfRelations)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
