// Serial reference vs OpenMP paths for each data-parallel kernel.

#include <benchmark/benchmark.h>

#include <random>

#include "perlef/harness.hpp"
#include "perlef/kernels.hpp"

using namespace perlef;
using kernels::Exec;

namespace {

std::vector<Complex> grid(std::size_t res) {
  std::vector<Complex> seeds;
  for (std::size_t i = 0; i < res; ++i)
    for (std::size_t j = 0; j < res; ++j)
      seeds.emplace_back(-1.0 + 2.0 * (i + 0.5) / res, -1.0 + 2.0 * (j + 0.5) / res);
  return seeds;
}

std::vector<GradedHomologyAction> random_actions(std::size_t count) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> n_dist(1, 5), e_dist(-3, 3);
  std::vector<GradedHomologyAction> out;
  for (std::size_t k = 0; k < count; ++k) {
    IntMatrix a(n_dist(rng));
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) a(i, j) = e_dist(rng);
    out.push_back(from_h1(std::move(a)));
  }
  return out;
}

void BM_NewtonSeedScan(benchmark::State& state) {
  const Exec exec = state.range(0) ? Exec::Parallel : Exec::Serial;
  const MapSpec map = MapSpec::polynomial({0.2, 0.0, 0.3});
  const auto seeds = grid(64);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::newton_seed_scan(map, 6, seeds, exec));
}
BENCHMARK(BM_NewtonSeedScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_LefschetzByPowers(benchmark::State& state) {
  const Exec exec = state.range(0) ? Exec::Parallel : Exec::Serial;
  const auto action = from_h1(IntMatrix{{2, 1, 0, 0}, {1, 1, 1, 0}, {0, 1, -1, 1}, {1, 0, 0, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(kernels::lefschetz_by_powers(action, 512, exec));
}
BENCHMARK(BM_LefschetzByPowers)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ClassifyBatch(benchmark::State& state) {
  const Exec exec = state.range(0) ? Exec::Parallel : Exec::Serial;
  const auto actions = random_actions(1000);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::classify_batch(actions, 4096, exec));
}
BENCHMARK(BM_ClassifyBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
