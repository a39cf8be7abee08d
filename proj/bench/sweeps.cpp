// Parallel sweep kernels against their serial references.
#include <benchmark/benchmark.h>

#include "../tests/support.hpp"

using namespace qmod;

namespace {

// A module over F_3 with a large submodule lattice: Kronecker, d = (2,3).
const test::World& kronecker() {
  static auto w = test::load_sample("kronecker.qm", "F3");
  return *w;
}

Rep lattice_module() {
  std::mt19937_64 rng(3);
  return test::random_rep(*kronecker().alg, {2, 3}, rng);
}

void submodules(benchmark::State& state, bool serial) {
  const Rep m = lattice_module();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_submodules(m, {}, serial).size());
}

void grass_sweep(benchmark::State& state, bool serial) {
  static auto w = test::load_sample("loop_arrow.qm", "F5");
  ProjectiveCover p(*w->alg, {2, 0});
  for (auto _ : state) benchmark::DoNotOptimize(grass_points(p, {3, 2}, {}, serial).size());
}

}  // namespace

BENCHMARK_CAPTURE(submodules, parallel, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(submodules, serial, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(grass_sweep, parallel, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(grass_sweep, serial, true)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
