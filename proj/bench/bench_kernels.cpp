#include <benchmark/benchmark.h>

#include "tilescope/classify.hpp"
#include "tilescope/kernels.hpp"
#include "tilescope/shapes.hpp"

using namespace tilescope;

namespace {

Execution exec_of(const benchmark::State& state) { return state.range(0) ? Execution::Parallel : Execution::Serial; }

// O7 over a skewed rational lattice: not a tiling, so the arrangement in the
// fundamental domain has many cells.
struct Workload {
  Polytope p = shapes::octagon_o7();
  Lattice l{{Vec{Rational(2, 3), Rational(1, 5)}, Vec{Rational(1, 7), Rational(4, 5)}}};
  kernels::FundamentalArrangement arr = kernels::build_fundamental_arrangement(p, l);
  std::vector<Rational> events = kernels::event_abscissae(arr.segments, Execution::Serial);
  std::vector<Point> samples = kernels::cell_samples(arr, events, Execution::Serial);
};

const Workload& workload() {
  static const Workload w;
  return w;
}

void BM_EventAbscissae(benchmark::State& state) {
  const auto& w = workload();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::event_abscissae(w.arr.segments, exec_of(state)));
  state.counters["segments"] = static_cast<double>(w.arr.segments.size());
}

void BM_CellSamples(benchmark::State& state) {
  const auto& w = workload();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::cell_samples(w.arr, w.events, exec_of(state)));
  state.counters["cells"] = static_cast<double>(w.samples.size());
}

void BM_CountCover(benchmark::State& state) {
  const auto& w = workload();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_cover(w.p, w.arr.translates, w.samples, exec_of(state)));
}

void BM_SampleCover3D(benchmark::State& state) {
  const auto p = shapes::truncated_octahedron();
  const Lattice l({Vec{4, 0, 0}, Vec{0, 4, 0}, Vec{2, 2, 2}});
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sample_cover(p, l, 2000, 0, exec_of(state)));
}

void BM_VerifyLatticeTiling(benchmark::State& state) {
  const auto& w = workload();
  VerifyOptions opts;
  opts.execution = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(verify_lattice_tiling(w.p, w.l, opts));
}

void BM_Search(benchmark::State& state) {
  const auto p = shapes::octagon_o7().scaled(2);
  for (auto _ : state) benchmark::DoNotOptimize(search_lattice_multiplicity(p, 4, {}, exec_of(state)));
}

}  // namespace

// Argument 0 runs the serial reference, 1 the OpenMP kernel.
BENCHMARK(BM_EventAbscissae)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CellSamples)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountCover)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleCover3D)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyLatticeTiling)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Search)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
