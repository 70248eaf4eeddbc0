#include <benchmark/benchmark.h>

#include "hyperenum/cosets.hpp"
#include "hyperenum/curves.hpp"
#include "hyperenum/galois_enum.hpp"

using namespace hyperenum;

static void BM_SymOrbits(benchmark::State& state) {
  const FieldCtx& F = field_of_order(static_cast<u64>(state.range(0)));
  for (auto _ : state) {
    auto reps = sym_orbit_reps(F, 6);
    benchmark::DoNotOptimize(reps.data());
  }
}
BENCHMARK(BM_SymOrbits)->Arg(7)->Arg(11)->Arg(13)->Arg(17)->Arg(23)->Unit(benchmark::kMillisecond);

static void BM_Curves(benchmark::State& state) {
  const FieldCtx& F = field_of_order(static_cast<u64>(state.range(0)));
  const auto reps = sym_orbit_reps(F, 6);
  for (auto _ : state) {
    std::size_t n = 0;
    for (const auto& r : reps) n += curves_from_rep(r.form).size();
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_Curves)->Arg(7)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_GenusThree(benchmark::State& state) {
  const FieldCtx& F = field_of_order(static_cast<u64>(state.range(0)));
  for (auto _ : state) {
    auto reps = sym_orbit_reps(F, 8);
    benchmark::DoNotOptimize(reps.data());
  }
}
BENCHMARK(BM_GenusThree)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_CosetsQuadratic(benchmark::State& state) {
  const FieldCtx& F = field_of_order(static_cast<u64>(state.range(0)));
  for (auto _ : state) {
    auto reps = coset_reps_q2(F);
    benchmark::DoNotOptimize(reps.data());
  }
}
BENCHMARK(BM_CosetsQuadratic)->Arg(5)->Arg(11)->Arg(23)->Unit(benchmark::kMillisecond);

static void BM_NaiveTable(benchmark::State& state) {
  const FieldCtx& F = field_of_order(static_cast<u64>(state.range(0)));
  for (auto _ : state) {
    auto t = naive_orbit_table(F, 5);
    benchmark::DoNotOptimize(t.entries.size());
  }
}
BENCHMARK(BM_NaiveTable)->Arg(5)->Arg(11)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
