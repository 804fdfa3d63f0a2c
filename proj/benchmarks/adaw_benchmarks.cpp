#include <benchmark/benchmark.h>

#include <random>

#include "adaw/archive.hpp"
#include "adaw/experiment.hpp"
#include "adaw/metrics.hpp"
#include "adaw/optimizer.hpp"

namespace {

std::vector<adaw::ObjectiveVector> random_points(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<adaw::ObjectiveVector> out(n, adaw::ObjectiveVector(m));
  for (auto& p : out)
    for (auto& v : p) v = u(rng);
  return out;
}

// Truncating 2N + N offspring back to 2N, as one archive maintenance does.
void BM_CrowdingRemoval(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = static_cast<std::size_t>(state.range(1));
  const auto pts = random_points(n + n / 2, m, 1);
  for (auto _ : state) benchmark::DoNotOptimize(adaw::crowding_removal_order(pts, n, m));
}
BENCHMARK(BM_CrowdingRemoval)->Args({200, 2})->Args({210, 3})->Args({440, 10});

void BM_Igd(benchmark::State& state) {
  const auto problem = adaw::make_problem(state.range(0) == 3 ? "DTLZ2" : "DTLZ2-10");
  const auto ref = adaw::sample_front(problem, adaw::default_front_size(problem.num_objectives));
  const auto sol = random_points(adaw::default_population(problem.num_objectives),
                                 problem.num_objectives, 2);
  for (auto _ : state) benchmark::DoNotOptimize(adaw::igd(ref, sol));
}
BENCHMARK(BM_Igd)->Arg(3)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_GenerationStep(benchmark::State& state) {
  const auto problem = adaw::make_problem(state.range(0) == 3 ? "DTLZ2" : "IDTLZ1-10");
  const std::size_t N = adaw::default_population(problem.num_objectives);
  auto params = adaw::AlgorithmParams::defaults(problem, N, 1000 * N, state.range(1) != 0, 1);
  adaw::Optimizer opt(problem, params);
  for (auto _ : state) opt.step();
}
BENCHMARK(BM_GenerationStep)->Args({3, 0})->Args({3, 1})->Args({10, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
