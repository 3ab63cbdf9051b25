#include <benchmark/benchmark.h>

#include <random>

#include "addcomb/covering.hpp"
#include "addcomb/fourier.hpp"
#include "addcomb/growth.hpp"
#include "addcomb/rectify.hpp"

using namespace addcomb;

namespace {

GSet random_set(std::int64_t n, std::size_t size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick(0, n - 1);
  std::vector<Code> v;
  while (v.size() < size) v.push_back(pick(rng));
  return GSet(GroupSpec::cyclic(n), std::move(v));  // duplicates collapse
}

void BM_SumsetDense(benchmark::State& state) {
  auto a = random_set(state.range(0), static_cast<std::size_t>(state.range(1)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(detail::sumset_dense(a, a));
}
BENCHMARK(BM_SumsetDense)->Args({1 << 12, 64})->Args({1 << 16, 64})->Args({1 << 16, 1024});

void BM_SumsetPairwise(benchmark::State& state) {
  auto a = random_set(state.range(0), static_cast<std::size_t>(state.range(1)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(detail::sumset_pairwise(a, a));
}
BENCHMARK(BM_SumsetPairwise)->Args({1 << 12, 64})->Args({1 << 16, 64})->Args({1 << 16, 1024});

void BM_SpectrumDirect(benchmark::State& state) {
  auto b = random_set(state.range(0), 32, 2);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(b, SpectrumMethod::kDirect));
}
BENCHMARK(BM_SpectrumDirect)->Arg(1009)->Arg(10007);

void BM_SpectrumFast(benchmark::State& state) {
  auto b = random_set(state.range(0), 32, 2);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(b, SpectrumMethod::kFast));
}
BENCHMARK(BM_SpectrumFast)->Arg(1009)->Arg(10007)->Arg(999983);

void BM_Diameter(benchmark::State& state) {
  auto a = random_set(state.range(0), 6, 3);
  for (auto _ : state) benchmark::DoNotOptimize(diameter(a));
}
BENCHMARK(BM_Diameter)->Arg(101)->Arg(1009);

void BM_PluenneckeWitness(benchmark::State& state) {
  auto a = random_set(1009, static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(pluennecke_witness(a, a, a));
}
BENCHMARK(BM_PluenneckeWitness)->Arg(6)->Arg(10)->Arg(14);

void BM_JCount(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(j_count(static_cast<int>(state.range(0)), 16));
}
BENCHMARK(BM_JCount)->Arg(3)->Arg(6)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
