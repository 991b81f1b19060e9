#include <benchmark/benchmark.h>

#include "vnlab/bimodule.hpp"
#include "vnlab/duality.hpp"

using namespace vnlab;

namespace {

Lattice middle_lattice(int n) {
  // a subgroup from the middle of the enumeration: neither side trivial
  const std::vector<Lattice> all = enumerate_subgroups(FiniteAbelianGroup({n}));
  return all[all.size() / 2];
}

}  // namespace

static void BM_EnumerateSubgroups(benchmark::State& state) {
  const FiniteAbelianGroup g({static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_subgroups(g));
}
BENCHMARK(BM_EnumerateSubgroups)->DenseRange(4, 8, 2);

static void BM_BesselBound(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Lattice l = middle_lattice(n);
  Rng rng(1);
  const Window g = Window::gaussian(l.group(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(bessel_bound_opt(g, l));
}
BENCHMARK(BM_BesselBound)->DenseRange(4, 8, 2);

static void BM_Commutant(benchmark::State& state) {
  const Index n = state.range(0);
  const StarAlgebra a = tensor_identity(full_matrix_algebra(2), n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(commutant(a));
}
BENCHMARK(BM_Commutant)->Arg(4)->Arg(6)->Arg(8);

static void BM_GaborBimodule(benchmark::State& state) {
  const Lattice l = middle_lattice(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gabor_bimodule(l));
}
BENCHMARK(BM_GaborBimodule)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_CdimProjectionPath(benchmark::State& state) {
  const Bimodule bm = random_instance(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cdim(bm.right()));
  state.counters["space_dim"] = static_cast<double>(bm.space_dim());
}
BENCHMARK(BM_CdimProjectionPath)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_CdimBlockFormula(benchmark::State& state) {
  const Bimodule bm = random_instance(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cdim_block_formula(bm.right()));
}
BENCHMARK(BM_CdimBlockFormula)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_BoundedVectors(benchmark::State& state) {
  const Bimodule bm = random_instance(5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(verify_left_right_bounded(bm, 10, 1, 1e-9));
}
BENCHMARK(BM_BoundedVectors)->Unit(benchmark::kMillisecond);

static void BM_BasicConstruction(benchmark::State& state) {
  const Index n = state.range(0);
  const StarAlgebra big = full_matrix_algebra(2 * n);
  const StarAlgebra sub = tensor_identity(full_matrix_algebra(n), 2);
  for (auto _ : state) benchmark::DoNotOptimize(BasicConstruction(TraceFunctional::matrix_trace(big), sub));
}
BENCHMARK(BM_BasicConstruction)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
