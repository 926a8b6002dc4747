#include <benchmark/benchmark.h>

#include "twmack/instances.hpp"
#include "twmack/witness.hpp"

using namespace twmack;

static void BM_SubgroupEnumeration_S4(benchmark::State& state) {
  auto s4 = symmetric_group(4);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_subgroups(s4));
}
BENCHMARK(BM_SubgroupEnumeration_S4);

static void BM_RefinedTransversal_S4(benchmark::State& state) {
  auto s4 = symmetric_group(4);
  auto subs = enumerate_subgroups(s4);
  auto full = full_subgroup(s4);
  for (auto _ : state)
    for (const auto& j : subs)
      for (const auto& k : subs) benchmark::DoNotOptimize(refined_transversal(j, k, full));
}
BENCHMARK(BM_RefinedTransversal_S4);

static void BM_Rref_GF7(benchmark::State& state) {
  auto f7 = FiniteField::make(7, 1);
  const int n = static_cast<int>(state.range(0));
  Matrix m(f7, n, n);
  long long seed = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      seed = (seed * 48271) % 2147483647;
      m.at(i, j) = static_cast<int>(seed % 7);
    }
  for (auto _ : state) benchmark::DoNotOptimize(rref_solve(m));
}
BENCHMARK(BM_Rref_GF7)->Arg(32)->Arg(64);

static void BM_TwistedAlgebra_GF64_C6(benchmark::State& state) {
  auto r = frobenius_gring(FiniteField::make(2, 6), cyclic_group(6));
  auto full = full_subgroup(r->group);
  for (auto _ : state) {
    auto t = make_twisted_ring(r, full);
    benchmark::DoNotOptimize(as_structure_algebra(t));
  }
}
BENCHMARK(BM_TwistedAlgebra_GF64_C6);

static void BM_IdempotentSplit_GF64_C6(benchmark::State& state) {
  auto r = frobenius_gring(FiniteField::make(2, 6), cyclic_group(6));
  auto alg = as_structure_algebra(make_twisted_ring(r, full_subgroup(r->group)));
  for (auto _ : state) benchmark::DoNotOptimize(primitive_central_idempotents(*alg.algebra));
}
BENCHMARK(BM_IdempotentSplit_GF64_C6);

static void BM_DecompositionWitness_S3(benchmark::State& state) {
  auto r = trivial_gring(ring_from_field(FiniteField::make(7, 1)), symmetric_group(3));
  auto h = subgroup_generated(r->group, {symmetric_element_from_cycles(3, "(12)")});
  auto full = full_subgroup(r->group);
  for (auto _ : state) {
    TwistedContext ctx(r);
    benchmark::DoNotOptimize(mackey_decomposition_witness(ctx, h, h, full));
  }
}
BENCHMARK(BM_DecompositionWitness_S3);

static void BM_UnitsAxioms_GF64(benchmark::State& state) {
  for (auto _ : state) {
    auto data = units_galois_mackey(2, 6);
    benchmark::DoNotOptimize(check_axioms(data));
  }
}
BENCHMARK(BM_UnitsAxioms_GF64);

BENCHMARK_MAIN();
