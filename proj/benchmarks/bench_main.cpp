#include <benchmark/benchmark.h>

#include <limits>

#include "metra/chebyshev.hpp"
#include "metra/hausdorff.hpp"
#include "metra/nnet.hpp"
#include "metra/rng.hpp"
#include "metra/space.hpp"

namespace {

using namespace metra;

void BM_KleinDist(benchmark::State& state) {
  const Space kb = Space::klein_ball(1.0, 1.0);
  Rng rng(1);
  const PointList pts = rng.points_in(kb, 256, 2);
  std::size_t i = 0;
  for (auto _ : state) {
    const double d = kb.dist(pts[i % 256], pts[(i + 7) % 256]);
    benchmark::DoNotOptimize(d);
    ++i;
  }
}
BENCHMARK(BM_KleinDist);

void BM_Hausdorff(benchmark::State& state) {
  const Space eu = Space::euclidean(2);
  Rng rng(2);
  const PointList M = rng.points_in(eu, state.range(0), 2);
  const PointList W = rng.points_in(eu, state.range(0), 2);
  for (auto _ : state) {
    const double d = hausdorff(eu, M, W);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_Hausdorff)->Arg(32)->Arg(128)->Arg(512);

void BM_Assignment(benchmark::State& state) {
  const Space eu = Space::euclidean(2);
  Rng rng(3);
  const PointList S = rng.points_in(eu, state.range(0), 2);
  const PointList T = rng.points_in(eu, state.range(0), 2);
  for (auto _ : state) {
    const Assignment a = alpha_p(eu, S, T, 2.0);
    benchmark::DoNotOptimize(a.cost);
  }
}
BENCHMARK(BM_Assignment)->Arg(8)->Arg(32)->Arg(64);

void BM_Bottleneck(benchmark::State& state) {
  const Space eu = Space::euclidean(2);
  Rng rng(4);
  const PointList S = rng.points_in(eu, state.range(0), 2);
  const PointList T = rng.points_in(eu, state.range(0), 2);
  const double inf = std::numeric_limits<double>::infinity();
  for (auto _ : state) {
    const Assignment a = alpha_p(eu, S, T, inf);
    benchmark::DoNotOptimize(a.cost);
  }
}
BENCHMARK(BM_Bottleneck)->Arg(8)->Arg(32)->Arg(64);

void BM_ChebyshevCenter(benchmark::State& state) {
  const Space eu = Space::euclidean(2);
  Rng rng(5);
  const PointList M = rng.points_in(eu, state.range(0), 2);
  for (auto _ : state) {
    const CenterResult c = chebyshev_center(eu, M);
    benchmark::DoNotOptimize(c.radius);
  }
}
BENCHMARK(BM_ChebyshevCenter)->Arg(8)->Arg(32)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
