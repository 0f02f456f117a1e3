#include <benchmark/benchmark.h>

#include "surfdyn/verify/suite.hpp"

using namespace surfdyn::verify;

namespace {

template <bool Parallel>
void BM_CycleBatch(benchmark::State& state) {
  SuiteOptions opt;
  opt.parallel = Parallel;
  for (auto _ : state) benchmark::DoNotOptimize(check_cycle_exclusion(opt));
}

template <bool Parallel>
void BM_NormalFormBatch(benchmark::State& state) {
  SuiteOptions opt;
  opt.parallel = Parallel;
  for (auto _ : state) benchmark::DoNotOptimize(check_normal_form_exactness(opt));
}

}  // namespace

BENCHMARK(BM_CycleBatch<true>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CycleBatch<false>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NormalFormBatch<true>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NormalFormBatch<false>)->Unit(benchmark::kMillisecond);
