#include <benchmark/benchmark.h>

#include "udw/harvesting/correlation.hpp"
#include "udw/harvesting/harvest.hpp"
#include "udw/numerics/special.hpp"
#include "udw/response/edr.hpp"
#include "udw/response/transition.hpp"

namespace {

using namespace udw;
using namespace udw::motion;

const DetectorParams kGap{0.1, 1.0};

void BM_Erfc(benchmark::State& state) {
  double x = -3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(numerics::erfc(x));
    x = x > 6.0 ? -3.0 : x + 0.01;
  }
}
BENCHMARK(BM_Erfc);

void BM_TransitionCircular(benchmark::State& state) {
  const auto c = CircularTrajectory::from_acceleration_speed(static_cast<double>(state.range(0)), 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(response::transition_probability_circular(c, kGap).value);
}
BENCHMARK(BM_TransitionCircular)->Arg(1)->Arg(10)->Arg(500)->Unit(benchmark::kMicrosecond);

void BM_TransitionUniform(benchmark::State& state) {
  const UniformTrajectory u(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(response::transition_probability_uniform(u, kGap).value);
}
BENCHMARK(BM_TransitionUniform)->Arg(1)->Arg(100)->Unit(benchmark::kMicrosecond);

void BM_EdrUniform(benchmark::State& state) {
  const UniformTrajectory u(100.0);
  for (auto _ : state) benchmark::DoNotOptimize(response::edr_uniform(u, DetectorParams{2.0, 1.0}).temperature);
}
BENCHMARK(BM_EdrUniform)->Unit(benchmark::kMicrosecond);

void BM_XComovingEqual(benchmark::State& state) {
  const auto c = CircularTrajectory::from_acceleration_radius(1.0, 0.5);
  const auto s = PairScenario::coaxial(c, c, 0.1, kGap);
  for (auto _ : state) benchmark::DoNotOptimize(harvesting::x_parallel_comoving_equal(s).value);
}
BENCHMARK(BM_XComovingEqual)->Unit(benchmark::kMicrosecond);

void BM_XParallelGeneral(benchmark::State& state) {
  const auto s = PairScenario::coaxial(CircularTrajectory(0.4, 1.2), CircularTrajectory(0.5, 0.6), 0.7, kGap);
  for (auto _ : state) benchmark::DoNotOptimize(harvesting::x_parallel(s).value);
}
BENCHMARK(BM_XParallelGeneral)->Unit(benchmark::kMillisecond);

void BM_XPerpendicular(benchmark::State& state) {
  const auto s = PairScenario::perpendicular(CircularTrajectory(0.5, 1.0), CircularTrajectory(0.4, 0.8), 0.6, kGap);
  for (auto _ : state) benchmark::DoNotOptimize(harvesting::x_perpendicular(s).value);
}
BENCHMARK(BM_XPerpendicular)->Unit(benchmark::kMillisecond);

void BM_XUniformPair(benchmark::State& state) {
  const auto s = PairScenario::uniform_pair(1.0, 0.5, kGap);
  for (auto _ : state) benchmark::DoNotOptimize(harvesting::x_uniform_pair(s).value);
}
BENCHMARK(BM_XUniformPair)->Unit(benchmark::kMicrosecond);

void BM_HarvestCounterRotating(benchmark::State& state) {
  const auto s = PairScenario::coaxial(CircularTrajectory(0.6, 0.9), CircularTrajectory(0.6, -0.9), 0.6, kGap);
  for (auto _ : state) benchmark::DoNotOptimize(harvesting::harvest(s).concurrence);
}
BENCHMARK(BM_HarvestCounterRotating)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
