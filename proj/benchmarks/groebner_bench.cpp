#include <benchmark/benchmark.h>

#include <string>

#include "catenary/groebner.hpp"
#include "catenary/script.hpp"

namespace {

using namespace catenary;

Ideal parsed_ideal(const std::string& text) {
  Script s = parse(text);
  const auto* cmd = s.commands().front();
  return cmd->presentation->ideal();
}

// Cyclic-style generators in n variables, truncated to the first three
// elementary symmetric-like sums.
std::string cyclic_script(int n) {
  std::string vars, e1, e2, e3;
  for (int i = 0; i < n; ++i) {
    std::string xi = "x" + std::to_string(i);
    std::string xj = "x" + std::to_string((i + 1) % n);
    std::string xk = "x" + std::to_string((i + 2) % n);
    vars += (i ? "," : "") + xi;
    e1 += (i ? " + " : "") + xi;
    e2 += (i ? " + " : "") + xi + "*" + xj;
    e3 += (i ? " + " : "") + xi + "*" + xj + "*" + xk;
  }
  return "ring Q[" + vars + "] ideal I = (" + e1 + ", " + e2 + ", " + e3 + ") analyze I";
}

}  // namespace

static void BM_GroebnerCyclic(benchmark::State& state) {
  Ideal ideal = parsed_ideal(cyclic_script(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(groebner_basis(ideal.generators(), ideal.ring()));
  }
}

static void BM_KrullDimension(benchmark::State& state) {
  Ideal ideal = parsed_ideal(
      "ring Q[x,y,z,v,w] ideal I = (x*y - z^2, y*v - w^2, x*w - z*v) analyze I");
  for (auto _ : state) {
    benchmark::DoNotOptimize(krull_dimension(ideal));
  }
}

static void BM_MaximalIdealAssociated(benchmark::State& state) {
  Ideal ideal = parsed_ideal("ring Q[x,y,z] ideal I = (x^2 - y*z, x*y^2, z^3 - x*y) analyze I");
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximal_ideal_associated(ideal));
  }
}

BENCHMARK(BM_GroebnerCyclic)->DenseRange(3, 5);
BENCHMARK(BM_KrullDimension);
BENCHMARK(BM_MaximalIdealAssociated);
