#include <benchmark/benchmark.h>

#include "catenary/families.hpp"
#include "catenary/spectra.hpp"

namespace {

using namespace catenary;

MonomialIdeal family_ideal(const FamilySpec& spec) {
  FamilyInstance inst = instantiate(spec);
  return *MonomialIdeal::from_ideal(inst.presentation.ideal());
}

}  // namespace

static void BM_BuildPoset(benchmark::State& state) {
  MonomialIdeal ideal = family_ideal(FamilySpec::ufd(state.range(0), state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_poset(ideal));
  }
}

static void BM_ConstructChain(benchmark::State& state) {
  MonomialIdeal ideal = family_ideal(FamilySpec::ufd(state.range(0), state.range(0)));
  SpecPoset poset = build_poset(ideal);
  const MonomialPrime start = minimal_primes(ideal).back();
  for (auto _ : state) {
    benchmark::DoNotOptimize(construct_chain(poset, start));
  }
}

static void BM_NoncatProfile(benchmark::State& state) {
  MonomialIdeal ideal = family_ideal(FamilySpec::catenary(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(noncat_profile(ideal));
  }
}

BENCHMARK(BM_BuildPoset)->DenseRange(2, 5);
BENCHMARK(BM_ConstructChain)->DenseRange(2, 5);
BENCHMARK(BM_NoncatProfile)->DenseRange(2, 8, 2);
