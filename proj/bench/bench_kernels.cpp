// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <numbers>
#include <random>
#include <vector>

#include "cimmino/kernels.hpp"

using namespace cimmino;

namespace {

struct Problem {
  std::size_t n;
  std::vector<double> a, b, norm_sq, w, x, out;
};

Problem make_problem(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Problem p{n, std::vector<double>(n * n), std::vector<double>(n), std::vector<double>(n, 0.0),
            std::vector<double>(n, 1.0), std::vector<double>(n), {}};
  for (auto& v : p.a) v = u(rng);
  for (auto& v : p.b) v = u(rng);
  for (auto& v : p.x) v = u(rng);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.norm_sq[i] += p.a[i * n + j] * p.a[i * n + j];
  return p;
}

template <auto Kernel>
void BM_weighted_gram(benchmark::State& state) {
  auto p = make_problem(static_cast<std::size_t>(state.range(0)));
  p.out.resize(p.n * p.n);
  for (auto _ : state) {
    Kernel(p.a, p.n, p.n, p.w, p.out);
    benchmark::DoNotOptimize(p.out.data());
  }
}

template <auto Kernel>
void BM_cimmino_update(benchmark::State& state) {
  auto p = make_problem(static_cast<std::size_t>(state.range(0)));
  p.out.resize(p.n);
  for (auto _ : state) {
    Kernel(p.a, p.n, p.n, p.b, p.norm_sq, p.w, p.x, p.out);
    benchmark::DoNotOptimize(p.out.data());
  }
}

template <auto Kernel>
void BM_contraction_grid(benchmark::State& state) {
  const auto points = static_cast<std::size_t>(state.range(0));
  std::vector<double> thetas(points);
  for (std::size_t t = 0; t < points; ++t)
    thetas[t] = std::numbers::pi * (static_cast<double>(t) + 0.5) / static_cast<double>(points);
  const std::vector<WeightPair> pairs{{1, 1}, {1.4, 1.4}, {0.5, 1.5}, {0.2, 0.2}};
  std::vector<double> out(points * pairs.size());
  for (auto _ : state) {
    Kernel(thetas, pairs, out);
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK(BM_weighted_gram<kernels::serial::weighted_gram>)->Name("weighted_gram/serial")->RangeMultiplier(4)->Range(16, 512);
BENCHMARK(BM_weighted_gram<kernels::omp::weighted_gram>)->Name("weighted_gram/omp")->RangeMultiplier(4)->Range(16, 512);
BENCHMARK(BM_cimmino_update<kernels::serial::cimmino_update>)->Name("cimmino_update/serial")->RangeMultiplier(4)->Range(16, 2048);
BENCHMARK(BM_cimmino_update<kernels::omp::cimmino_update>)->Name("cimmino_update/omp")->RangeMultiplier(4)->Range(16, 2048);
BENCHMARK(BM_contraction_grid<kernels::serial::contraction_grid>)->Name("contraction_grid/serial")->RangeMultiplier(8)->Range(160, 163840);
BENCHMARK(BM_contraction_grid<kernels::omp::contraction_grid>)->Name("contraction_grid/omp")->RangeMultiplier(8)->Range(160, 163840);

BENCHMARK_MAIN();
