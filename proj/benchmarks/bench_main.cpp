#include "maoea/csa.hpp"
#include "maoea/dpp.hpp"
#include "maoea/eigen_solver.hpp"
#include "maoea/moea.hpp"
#include "maoea/problems.hpp"
#include "maoea/rng.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace maoea;

namespace {

std::vector<Solution> random_front(std::size_t n, int m, std::uint64_t seed) {
  RngStream rng(seed);
  const auto spec = make_problem("dtlz2", m);
  std::vector<Solution> pop;
  for (const auto& f : true_pf_sample(spec, n, rng)) {
    ObjectiveVector g = f;
    for (auto& v : g) v *= rng.uniform(1.0, 1.3);
    pop.push_back(Solution{{}, g, g});
  }
  return pop;
}

Eigen::MatrixXd psd(Eigen::Index n) {
  RngStream rng(3);
  Eigen::MatrixXd b(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) b(i, j) = rng.normal();
  return b * b.transpose();
}

void BM_Eigen(benchmark::State& state, EigenMethod method) {
  const Eigen::MatrixXd l = psd(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigendecompose(l, method));
  }
}
BENCHMARK_CAPTURE(BM_Eigen, tridiagonal, EigenMethod::kTridiagonal)->Arg(100)->Arg(250)->Arg(500);
BENCHMARK_CAPTURE(BM_Eigen, jacobi, EigenMethod::kJacobi)->Arg(100)->Arg(250);

void BM_BuildKernel(benchmark::State& state) {
  const auto pop = random_front(static_cast<std::size_t>(state.range(0)), 10, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_kernel(pop, 0.5, SimilarityMode::kExpCosDistance));
  }
}
BENCHMARK(BM_BuildKernel)->Arg(250)->Arg(480);

void BM_GreedySelect(benchmark::State& state) {
  const auto pop = random_front(static_cast<std::size_t>(state.range(0)), 5, 7);
  const auto kernel = build_kernel(pop, 0.5, SimilarityMode::kExpCosDistance);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dpp_select_greedy(kernel, pop.size() / 2));
  }
}
BENCHMARK(BM_GreedySelect)->Arg(252)->Arg(460);

void BM_KdppSample(benchmark::State& state) {
  const auto pop = random_front(252, 5, 9);
  const auto kernel = build_kernel(pop, 0.5, SimilarityMode::kExpCosDistance);
  RngStream rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kdpp_sample(kernel, 126, rng, RankPolicy::kPadNullSpace));
  }
}
BENCHMARK(BM_KdppSample);

// Initialization plus ten generations on DTLZ2, M = 5.
void BM_TenGenerations(benchmark::State& state) {
  auto config = AlgoConfig::defaults(make_problem("dtlz2", 5), 126, 1);
  config.max_evaluations = 126 * 11;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(config));
  }
}
BENCHMARK(BM_TenGenerations)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
