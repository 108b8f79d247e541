#include <benchmark/benchmark.h>

#include "dupcalc/catalog.hpp"
#include "dupcalc/conditions.hpp"
#include "dupcalc/congruence.hpp"
#include "dupcalc/duplicate.hpp"
#include "dupcalc/hom.hpp"

namespace {

using namespace dupcalc;

void BM_duplicate_16(benchmark::State& state) {
  const Duplicator& g = catalog_duplicator("Gamma_TLtf");
  const FiniteAlgebra& base = catalog_algebra("4DBu");
  for (auto _ : state) benchmark::DoNotOptimize(duplicate(g, base));
}
BENCHMARK(BM_duplicate_16);

void BM_duplicate_256(benchmark::State& state) {
  const Duplicator& g = catalog_duplicator("Gamma_TLtfi_binary");
  const FiniteAlgebra& base = catalog_algebra("16DBCu");
  for (auto _ : state) benchmark::DoNotOptimize(duplicate(g, base));
}
BENCHMARK(BM_duplicate_256);

void BM_congruence_lattice_9(benchmark::State& state) {
  const FiniteAlgebra& alg = catalog_algebra("9DB");
  for (auto _ : state) benchmark::DoNotOptimize(congruence_lattice(alg));
}
BENCHMARK(BM_congruence_lattice_9);

void BM_clone_search_L(benchmark::State& state) {
  const Duplicator& g = catalog_duplicator("Gamma_BLu");
  std::vector<FiniteAlgebra> members{catalog_algebra("3chain")};
  SearchBudget budget;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        check_condition_L(g, members, CheckMode::search, budget));
}
BENCHMARK(BM_clone_search_L);

void BM_find_isomorphism_16(benchmark::State& state) {
  FiniteAlgebra a = duplicate(catalog_duplicator("Gamma_TLtf"),
                              catalog_algebra("4DBu"));
  const FiniteAlgebra& b = catalog_algebra("16TLtf");
  for (auto _ : state) benchmark::DoNotOptimize(find_isomorphism(a, b));
}
BENCHMARK(BM_find_isomorphism_16);

}  // namespace

BENCHMARK_MAIN();
