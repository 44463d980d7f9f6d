#include <benchmark/benchmark.h>

#include <random>

#include "hochlab/constructions.hpp"
#include "hochlab/hochschild.hpp"
#include "hochlab/linalg.hpp"

using namespace hochlab;

namespace {

SparseMatrix random_sparse(std::size_t n, double density, long magnitude, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<long> value(-magnitude, magnitude);
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> t;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (keep(rng)) t.emplace_back(r, c, Rational(value(rng)));
    }
  }
  return SparseMatrix::from_triplets(n, n, t);
}

void BM_RankRandomSparse(benchmark::State& state) {
  const auto m = random_sparse(static_cast<std::size_t>(state.range(0)), 0.02, 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankRandomSparse)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_RankLargeEntries(benchmark::State& state) {
  const auto m = random_sparse(static_cast<std::size_t>(state.range(0)), 0.05, 1L << 40, 2);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankLargeEntries)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_RankHochschildBoundary(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto slice = hochschild_complex(group_algebra(symmetric_group_3()), k);
  const auto& d = slice.differential(k);
  for (auto _ : state) benchmark::DoNotOptimize(rank(d));
  state.counters["cols"] = static_cast<double>(d.cols());
}
BENCHMARK(BM_RankHochschildBoundary)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
