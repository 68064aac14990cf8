// Parallel kernels against their serial reference versions.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>

#include "seclab/betti.hpp"
#include "seclab/geometry.hpp"
#include "seclab/linalg.hpp"
#include "seclab/secant.hpp"

using namespace seclab;

namespace {

DenseMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  DenseMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = static_cast<std::uint32_t>(rng() % kDefaultPrime);
  }
  return m;
}

void BM_RankSerial(benchmark::State& state) {
  PrimeField f;
  auto n = static_cast<std::size_t>(state.range(0));
  DenseMatrix m = random_matrix(n, n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(rank_serial(m, f));
}

void BM_RankParallel(benchmark::State& state) {
  PrimeField f;
  auto n = static_cast<std::size_t>(state.range(0));
  DenseMatrix m = random_matrix(n, n, 7);
  omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(rank_parallel(m, f));
  state.counters["threads"] = static_cast<double>(state.range(1));
}

// Degree 3 piece of the secant variety of the genus 2 curve of degree 9.
void BM_Prolong(benchmark::State& state) {
  Ideal X = curve_ideal(recipe_by_name("g2d9"));
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(secant_degree_piece(X, 1, parallel).dim());
}

void BM_Betti(benchmark::State& state) {
  Ideal X = curve_ideal(recipe_by_name("g2d12"));
  BettiOptions o;
  o.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(X, o).entries().size());
}

}  // namespace

BENCHMARK(BM_RankSerial)->Arg(256)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankParallel)
    ->ArgsProduct({{256, 512, 1024}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_Prolong)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Betti)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
