#include <benchmark/benchmark.h>

#include <random>

#include "mch/differentials.hpp"
#include "mch/fixtures.hpp"
#include "mch/graph_enumerate.hpp"
#include "mch/linking.hpp"
#include "mch/multilink.hpp"
#include "mch/random_gen.hpp"

namespace {

void bench_linking(benchmark::State& state) {
  const mch::NiceGenerator g = mch::fixtures::clasp_pair();
  for (auto _ : state) {
    benchmark::DoNotOptimize(mch::linking_number(g.curves[0], g.curves[1]));
  }
}
BENCHMARK(bench_linking);

void bench_enumerate(benchmark::State& state) {
  mch::ChargeLattice lat;
  lat.rank = 1;
  lat.omega = {mch::Rat(1)};
  lat.norm_weights = {mch::Rat(1)};
  const int beta = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mch::enumerate_graphs(lat, {beta}, 1, mch::Rat(1)));
  }
}
BENCHMARK(bench_enumerate)->Arg(2)->Arg(3);

void bench_boundary_hat(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const mch::MultiCurveChain c = mch::random_second_chain(rng, 4, 3, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mch::boundary_hat(c));
  }
}
BENCHMARK(bench_boundary_hat);

void bench_sweep_track(benchmark::State& state) {
  const mch::Isotopy iso = mch::fixtures::full_pass();
  for (auto _ : state) {
    benchmark::DoNotOptimize(mch::multilink_track(mch::make_nice_sweep(iso)));
  }
}
BENCHMARK(bench_sweep_track);

}  // namespace

BENCHMARK_MAIN();
