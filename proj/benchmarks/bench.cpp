// Microbenchmarks over a self-generated 8-crossing two-bridge diagram so no
// data file is needed.

#include <benchmark/benchmark.h>

#include "knotclock/alexpoly.hpp"
#include "knotclock/clocknum.hpp"
#include "knotclock/generators.hpp"
#include "knotclock/lattice.hpp"
#include "knotclock/state.hpp"

namespace {

const knotclock::TwoBridgeDiagram& bench_diagram() {
  static const knotclock::TwoBridgeDiagram d =
      knotclock::gen_two_bridge({{2, 1, 1, 1, 3}});
  return d;
}

void BM_EnumerateStates(benchmark::State& state) {
  const auto& d = bench_diagram();
  for (auto _ : state) {
    auto states =
        knotclock::enumerate_states(d.diagram.universe, d.recommended_stars);
    benchmark::DoNotOptimize(states);
  }
}
BENCHMARK(BM_EnumerateStates);

void BM_BuildLattice(benchmark::State& state) {
  const auto& d = bench_diagram();
  for (auto _ : state) {
    auto lat =
        knotclock::build_lattice(d.diagram.universe, d.recommended_stars);
    benchmark::DoNotOptimize(lat);
  }
}
BENCHMARK(BM_BuildLattice);

void BM_AlexanderDet(benchmark::State& state) {
  const auto& d = bench_diagram();
  for (auto _ : state) {
    auto det = knotclock::alexander_det(d.diagram, d.recommended_stars);
    benchmark::DoNotOptimize(det);
  }
}
BENCHMARK(BM_AlexanderDet);

void BM_PlacementSweep(benchmark::State& state) {
  const auto& d = bench_diagram();
  for (auto _ : state) {
    auto report = knotclock::clock_number_of_diagram(d.diagram.universe);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_PlacementSweep);

}  // namespace

BENCHMARK_MAIN();
