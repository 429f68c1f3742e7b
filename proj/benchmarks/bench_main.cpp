#include <benchmark/benchmark.h>

#include "viewsel/harness.hpp"
#include "viewsel/reconstructor.hpp"
#include "viewsel/rotation.hpp"
#include "viewsel/selection.hpp"

using namespace viewsel;

namespace {

VoxelGrid shape(std::uint32_t dim) {
  Rng rng(1);
  ShapeSpec spec;
  spec.kind = ShapeKind::cross;
  return generate_shape(spec, dim, rng);
}

void BM_RotateGrid(benchmark::State& state) {
  const auto g = shape(static_cast<std::uint32_t>(state.range(0)));
  const Viewpoint v(37, 21);
  for (auto _ : state) benchmark::DoNotOptimize(rotate_grid(g, v));
}
BENCHMARK(BM_RotateGrid)->Arg(16)->Arg(32)->Arg(64);

void BM_ScoreAll(benchmark::State& state) {
  const auto g = shape(static_cast<std::uint32_t>(state.range(0)));
  const auto lattice = discretize_viewpoints(30);
  for (auto _ : state) benchmark::DoNotOptimize(score_all(g, lattice));
}
BENCHMARK(BM_ScoreAll)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_Carve(benchmark::State& state) {
  const std::uint32_t dim = static_cast<std::uint32_t>(state.range(0));
  const auto g = shape(dim);
  std::vector<ViewObservation> obs;
  for (double yaw : {-165.0, -75.0, 15.0, 105.0, 60.0, -120.0}) {
    const Viewpoint v(yaw, yaw / 3);
    obs.push_back({v, render_silhouette(g, v)});
  }
  for (auto _ : state) benchmark::DoNotOptimize(carve(obs, dim));
}
BENCHMARK(BM_Carve)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_LoopIteration(benchmark::State& state) {
  const std::vector<ShapeKind> kinds{ShapeKind::ell, ShapeKind::cross};
  const auto corpus = generate_corpus(4, 32, 1, kinds);
  LoopConfig cfg;
  cfg.iterations = 1;
  cfg.update_fraction = 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(run_loop(corpus, cfg));
}
BENCHMARK(BM_LoopIteration)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
