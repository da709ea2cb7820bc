#include <benchmark/benchmark.h>

#include "tricrit/canon.hpp"
#include "tricrit/enumerate.hpp"
#include "tricrit/signs.hpp"

using namespace tricrit;

namespace {

DistinguishingGraph sample_graph(int n) {
  return enumerate_functions(n, Relation::Conjugacy, SignMode::Oriented).front();
}

void BM_TreeCode(benchmark::State& state) {
  Graph tree = enumerate_point_graphs(static_cast<int>(state.range(0))).front().graph;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_tree_code(tree));
}
BENCHMARK(BM_TreeCode)->Arg(3)->Arg(6);

void BM_CanonicalCode(benchmark::State& state) {
  DistinguishingGraph g = sample_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(g, Relation::Conjugacy));
}
BENCHMARK(BM_CanonicalCode)->Arg(2)->Arg(3)->Arg(4);

void BM_EquivalenceCode(benchmark::State& state) {
  DistinguishingGraph g = sample_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(g, Relation::Equivalence));
}
BENCHMARK(BM_EquivalenceCode)->Arg(3)->Arg(4);

void BM_Automorphisms(benchmark::State& state) {
  DistinguishingGraph g = sample_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(automorphisms(g));
}
BENCHMARK(BM_Automorphisms)->Arg(3)->Arg(4);

void BM_PointGraphs(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_point_graphs(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PointGraphs)->Arg(4)->Arg(5)->Arg(6);

void BM_EnumerateFunctions(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_functions(static_cast<int>(state.range(0)),
                                                 Relation::Conjugacy, SignMode::Oriented));
}
BENCHMARK(BM_EnumerateFunctions)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EnumerateFunctionsParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        enumerate_functions(4, Relation::Conjugacy, SignMode::Oriented,
                            static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateFunctionsParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SignOrbits(benchmark::State& state) {
  DistinguishingGraph g = sample_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sign_orbits(g));
}
BENCHMARK(BM_SignOrbits)->Arg(3)->Arg(4);

void BM_PairCountMatrix(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(pair_count_matrix(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PairCountMatrix)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
