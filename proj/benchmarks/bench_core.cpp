#include <benchmark/benchmark.h>

#include "matroidlab/binary_matroid.hpp"
#include "matroidlab/geodesic.hpp"
#include "matroidlab/group_f2.hpp"
#include "matroidlab/poset_ir.hpp"
#include "matroidlab/simplicial_complex.hpp"

using namespace matroidlab;

namespace {

void BM_FanoCircuits(benchmark::State& state) {
  for (auto _ : state) {
    BinaryMatroid m(3, {1, 2, 3, 4, 5, 6, 7});
    benchmark::DoNotOptimize(m.circuits().size());
  }
}
BENCHMARK(BM_FanoCircuits);

void BM_MinorSearchRank5(benchmark::State& state) {
  const BinaryMatroid m = BinaryMatroid::from_matrix(rank5_counterexample_matrix());
  for (auto _ : state) benchmark::DoNotOptimize(find_fano_minor(m).has_value());
}
BENCHMARK(BM_MinorSearchRank5);

void BM_TuSigningRank5(benchmark::State& state) {
  const BinaryMatroid m = BinaryMatroid::from_matrix(rank5_counterexample_matrix());
  for (auto _ : state) benchmark::DoNotOptimize(is_regular_tu(m));
}
BENCHMARK(BM_TuSigningRank5);

void BM_EnumerateIR3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ir_f2(3).nodes.size());
}
BENCHMARK(BM_EnumerateIR3);

void BM_HomologyP(benchmark::State& state) {
  const SimplicialComplex p = complement_complex_r3();
  for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(p).betti.size());
}
BENCHMARK(BM_HomologyP);

void BM_HomologyOrderComplexIR3(benchmark::State& state) {
  const SimplicialComplex k = order_complex(enumerate_ir_f2(3));
  for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(k).betti.size());
}
BENCHMARK(BM_HomologyOrderComplexIR3);

void BM_ShellingP(benchmark::State& state) {
  const SimplicialComplex p = complement_complex_r3();
  for (auto _ : state) benchmark::DoNotOptimize(find_shelling(p).has_value());
}
BENCHMARK(BM_ShellingP);

void BM_ConjugacyClassesGL3(benchmark::State& state) {
  const auto group = enumerate_group(3);
  for (auto _ : state) benchmark::DoNotOptimize(conjugacy_classes(group).size());
}
BENCHMARK(BM_ConjugacyClassesGL3);

void BM_Ir2zBallDepth8(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(ir2z_ball(ir2z_standard_basis(), 8).nodes.size());
}
BENCHMARK(BM_Ir2zBallDepth8);

}  // namespace

BENCHMARK_MAIN();
