#include <benchmark/benchmark.h>

#include "rpvt/depth.hpp"
#include "rpvt/floating_body.hpp"
#include "rpvt/ratio.hpp"
#include "rpvt/sampling.hpp"

namespace {

using namespace rpvt;

const SeedSpec kSeed{42, 0};

void BM_RatioSerial(benchmark::State& state) {
  const auto spec = make_cube_solid(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        volume_ratio_mc_serial(spec, 16, static_cast<int>(state.range(0)), 0, kSeed,
                               RatioMethod::exact_hull));
  }
}
BENCHMARK(BM_RatioSerial)->Arg(256)->Arg(1024);

void BM_RatioParallel(benchmark::State& state) {
  const auto spec = make_cube_solid(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(volume_ratio_mc(spec, 16, static_cast<int>(state.range(0)), 0,
                                             kSeed, RatioMethod::exact_hull, 0));
  }
}
BENCHMARK(BM_RatioParallel)->Arg(256)->Arg(1024);

void BM_RatioMembershipSerial(benchmark::State& state) {
  const auto spec = make_cube_vertices(10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(volume_ratio_mc_serial(spec, 40, static_cast<int>(state.range(0)),
                                                    256, kSeed, RatioMethod::membership_mc));
  }
}
BENCHMARK(BM_RatioMembershipSerial)->Arg(8);

void BM_RatioMembershipParallel(benchmark::State& state) {
  const auto spec = make_cube_vertices(10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(volume_ratio_mc(spec, 40, static_cast<int>(state.range(0)), 256,
                                             kSeed, RatioMethod::membership_mc, 0));
  }
}
BENCHMARK(BM_RatioMembershipParallel)->Arg(8);

void BM_DepthBattery(benchmark::State& state) {
  const auto spec = make_ball(3);
  const SampleSet smp = sample(spec, 20000, kSeed);
  const int q = static_cast<int>(state.range(0));
  std::vector<double> queries;
  RngStream rng(kSeed.with_stream(7));
  for (int i = 0; i < 3 * q; ++i) queries.push_back(0.5 * rng.next_uniform(-1.0, 1.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        depth_empirical_battery(queries, q, smp, 256, kSeed.with_stream(9), 0));
  }
}
BENCHMARK(BM_DepthBattery)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
