#include <benchmark/benchmark.h>

#include <vector>

#include "hypertile/constructors.hpp"
#include "hypertile/polygon.hpp"
#include "hypertile/random_polygons.hpp"
#include "hypertile/tiling_comb.hpp"

using namespace hypertile;

namespace {

void BM_Dist(benchmark::State& state) {
  HPoint p = HPoint::from_polar(3.0, 0.4);
  HPoint q = HPoint::from_polar(static_cast<double>(state.range(0)), 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(dist(p, q));
}
BENCHMARK(BM_Dist)->Arg(1)->Arg(10);

void BM_Area(benchmark::State& state) {
  Polygon p = regular_polygon(static_cast<int>(state.range(0)), Angle(kPi / 3));
  for (auto _ : state) benchmark::DoNotOptimize(area(p));
}
BENCHMARK(BM_Area)->Arg(7)->Arg(12);

void BM_IsEmbedded(benchmark::State& state) {
  Rng rng(5);
  Polygon p = random_star_polygon(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_embedded(p));
}
BENCHMARK(BM_IsEmbedded)->Arg(8)->Arg(32);

// The root scan dominates: a thousand chain walks per call.
void BM_EquilateralTile(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  double a = 0.7 * (n - 2) * kPi;
  for (auto _ : state) benchmark::DoNotOptimize(equilateral_tile(n, a));
}
BENCHMARK(BM_EquilateralTile)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_AngleCombinations(benchmark::State& state) {
  std::vector<double> angles{kPi / 2, kPi / 3, kPi / 7, kPi / 42};
  for (auto _ : state) benchmark::DoNotOptimize(angle_combinations(angles));
}
BENCHMARK(BM_AngleCombinations);

void BM_ConvexHull(benchmark::State& state) {
  Rng rng(9);
  Polygon p = random_star_polygon(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(convex_hull(p));
}
BENCHMARK(BM_ConvexHull)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
