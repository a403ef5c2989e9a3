#include <benchmark/benchmark.h>

#include "relroot/chevalley.hpp"
#include "relroot/finitelab.hpp"
#include "relroot/folding.hpp"
#include "relroot/poly.hpp"
#include "relroot/relcalc.hpp"

using namespace relroot;

static void BM_PolyProduct(benchmark::State& state) {
  auto reg = VarRegistry::make({"x", "y", "z"});
  Poly s = Poly::var(reg, "x") + Poly::var(reg, "y") * 2 - Poly::var(reg, "z") + 1;
  for (auto _ : state) benchmark::DoNotOptimize(s.pow(unsigned(state.range(0))));
}
BENCHMARK(BM_PolyProduct)->Arg(4)->Arg(8);

static void BM_RootSystem(benchmark::State& state) {
  const char* names[] = {"E6", "E7", "E8"};
  auto t = RootType::parse(names[state.range(0)]);
  for (auto _ : state) {
    RootSystem rs(t);
    benchmark::DoNotOptimize(rs.size());
  }
}
BENCHMARK(BM_RootSystem)->DenseRange(0, 2);

static void BM_RootElement(benchmark::State& state) {
  auto cb = chevalley_basis(RootType('F', 4));
  auto reg = VarRegistry::make({"t"});
  Poly t = Poly::var(reg, "t");
  for (auto _ : state) benchmark::DoNotOptimize(adjoint_root_element(*cb, 0, t));
}
BENCHMARK(BM_RootElement);

static void BM_CommutatorMaps(benchmark::State& state) {
  FoldingSpec spec = FoldingSpec::parse("C4 gamma=trivial levi=2,4");
  RelativeRootSystem rrs(root_system(spec.type), spec);
  auto cb = chevalley_basis(spec.type);
  std::size_t a = *rrs.index_of({1, 0}), b = *rrs.index_of({0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(compute_relative_commutator_maps(rrs, *cb, a, b, false));
}
BENCHMARK(BM_CommutatorMaps);

static void BM_GroupClosure(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(generate_elementary_group(RootType('C', 2), 2).order());
}
BENCHMARK(BM_GroupClosure)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
