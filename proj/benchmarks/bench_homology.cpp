#include <benchmark/benchmark.h>

#include "hochlab/constructions.hpp"
#include "hochlab/cyclic.hpp"
#include "hochlab/hochschild.hpp"

using namespace hochlab;

namespace {

void BM_HHJet(benchmark::State& state) {
  const auto a = jet_algebra(1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hh(a, 5));
}
BENCHMARK(BM_HHJet)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_HHGroupS3(benchmark::State& state) {
  const auto a = group_algebra(symmetric_group_3());
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hh(a, N));
}
BENCHMARK(BM_HHGroupS3)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_NormalizedS3(benchmark::State& state) {
  const auto a = group_algebra(symmetric_group_3());
  for (auto _ : state) benchmark::DoNotOptimize(normalized_hh(a, 4));
}
BENCHMARK(BM_NormalizedS3)->Unit(benchmark::kMillisecond);

void BM_HCTotalComplex(benchmark::State& state) {
  const auto a = jet_algebra(1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hc(a, 5));
}
BENCHMARK(BM_HCTotalComplex)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_HKRPiece(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hkr_check(2, 3, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HKRPiece)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
