#include <benchmark/benchmark.h>

#include <repkit/presets.hpp>
#include <repkit/qh.hpp>
#include <repkit/radical.hpp>

using namespace repkit;

namespace {

AlgebraPtr alg(const std::string& name) { return build_algebra(preset(name)); }

void BM_AlgebraBasis(benchmark::State& state) {
  AlgebraFile f = preset("A3");
  for (auto _ : state) benchmark::DoNotOptimize(build_algebra(f));
}
BENCHMARK(BM_AlgebraBasis);

void BM_HomBasis(benchmark::State& state) {
  AlgebraPtr a = alg("N3");
  Rep p = projective_rep(a, 0);
  for (auto _ : state) benchmark::DoNotOptimize(hom_basis(p, p));
}
BENCHMARK(BM_HomBasis);

void BM_Enumerate(benchmark::State& state) {
  AlgebraPtr a = alg("A3");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_indecomposables(a));
}
BENCHMARK(BM_Enumerate);

void BM_RadTable(benchmark::State& state) {
  AlgebraPtr a = alg("A3");
  EnumerationResult e = enumerate_indecomposables(a);
  IndexedCategory c = make_category(a, e.objects, true);
  for (auto _ : state) benchmark::DoNotOptimize(rad_power_table(c));
}
BENCHMARK(BM_RadTable);

void BM_CharacteristicModules(benchmark::State& state) {
  AlgebraPtr a = alg("A3");
  for (auto _ : state) {
    QHData qh = make_qh_data(a);
    characteristic_modules(qh);
    benchmark::DoNotOptimize(qh);
  }
}
BENCHMARK(BM_CharacteristicModules);

} // namespace

BENCHMARK_MAIN();
