#include <benchmark/benchmark.h>

#include "lambdamaps/bijections.hpp"
#include "lambdamaps/connectivity.hpp"
#include "lambdamaps/enumeration.hpp"
#include "lambdamaps/planar_maps.hpp"
#include "lambdamaps/series.hpp"

using namespace lambdamaps;

static void BM_Rho(benchmark::State& state) {
  const auto& maps = gen_maps(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const RootedMap& m : maps) benchmark::DoNotOptimize(rho(m));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(maps.size()));
}
BENCHMARK(BM_Rho)->DenseRange(3, 5);

static void BM_RhoDirect(benchmark::State& state) {
  const auto& maps = gen_maps(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const RootedMap& m : maps) benchmark::DoNotOptimize(rho_direct(m));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(maps.size()));
}
BENCHMARK(BM_RhoDirect)->DenseRange(3, 5);

static void BM_RhoInv(benchmark::State& state) {
  const auto& trees = gen_trees(static_cast<int>(state.range(0)), TreeKind::VTree);
  for (auto _ : state) {
    for (const LabeledTree& t : trees) benchmark::DoNotOptimize(rho_inv(VTree(t)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(trees.size()));
}
BENCHMARK(BM_RhoInv)->DenseRange(3, 5);

static void BM_CanonicalForm(benchmark::State& state) {
  const auto& maps = gen_maps(5);
  for (auto _ : state) {
    for (const RootedMap& m : maps) benchmark::DoNotOptimize(canonical_form(m.rotation_system()));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(maps.size()));
}
BENCHMARK(BM_CanonicalForm);

static void BM_PsiRoundTrip(benchmark::State& state) {
  const auto& skeletons = gen_skeletons(static_cast<int>(state.range(0)), TermFamily::Planar);
  for (auto _ : state) {
    for (const Skeleton& s : skeletons) benchmark::DoNotOptimize(psi_inv(psi(s)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(skeletons.size()));
}
BENCHMARK(BM_PsiRoundTrip)->DenseRange(4, 6);

static void BM_AmbientSkeletonScan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long long planar = 0;
    for (int u = 0; u <= n; ++u) {
      for (const Skeleton& s : gen_unary_binary_trees(n, u)) planar += check_family(s, TermFamily::Planar);
    }
    benchmark::DoNotOptimize(planar);
  }
}
BENCHMARK(BM_AmbientSkeletonScan)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_SolveZU(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_zu(n, n));
}
BENCHMARK(BM_SolveZU)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_RootLabelCounts(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(degree_tree_root_label_counts(n));
}
BENCHMARK(BM_RootLabelCounts)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
