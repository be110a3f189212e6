#include <benchmark/benchmark.h>
#include <omp.h>

#include "armatch/oracle.hpp"
#include "armatch/rainbow.hpp"
#include "armatch/solvers.hpp"
#include "armatch/constructions.hpp"

using namespace armatch;

namespace {

const EdgeColoring& h1_12() {
  static const EdgeColoring c = build_H1_coloring(12, 3).coloring;
  return c;
}

const EdgeColoring& h2_16() {
  static const EdgeColoring c = build_H2_coloring(16, 4).coloring;
  return c;
}

void BM_CensusSerial_H1_12_3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(perfect_matching_census_serial(h1_12()));
}

void BM_CensusParallel_H1_12_3(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(perfect_matching_census(h1_12(), threads));
}

void BM_CensusSerial_H2_16_4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(perfect_matching_census_serial(h2_16()));
}

void BM_CensusParallel_H2_16_4(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(perfect_matching_census(h2_16(), threads));
}

void BM_TuranSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_turan_stable_serial(n, 3, 2));
}

void BM_TuranParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(brute_turan_stable(n, 3, 2, threads));
}

void BM_CrossIntersecting(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_cross_intersecting_max(6, 2, threads));
}

void BM_MatchingNumber_D(benchmark::State& state) {
  const UniformHypergraph h = build_D(static_cast<int>(state.range(0)), 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(matching_number(h));
}

void thread_args(benchmark::internal::Benchmark* b) {
  const int max = omp_get_max_threads();
  for (int t = 1; t <= max; t *= 2) b->Arg(t);
  if ((max & (max - 1)) != 0) b->Arg(max);
}

}  // namespace

BENCHMARK(BM_CensusSerial_H1_12_3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel_H1_12_3)->Apply(thread_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusSerial_H2_16_4)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_CensusParallel_H2_16_4)->Apply(thread_args)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_TuranSerial)->Arg(8)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TuranParallel)
    ->ArgsProduct({{8, 9, 10}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrossIntersecting)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MatchingNumber_D)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
