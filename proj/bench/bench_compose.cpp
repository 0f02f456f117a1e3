#include <benchmark/benchmark.h>

#include <random>

#include "surfdyn/algebra/compose.hpp"

using namespace surfdyn;

namespace {

template <Scalar F>
Jet<F> random_jet(int dim, int order, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-3, 3), den(1, 4);
  Jet<F> j(dim, order);
  for (int k = 0; k < dim; ++k)
    for (int n = 1; n < j.basis().size(); ++n)
      j.set_at(k, n, ScalarTraits<F>::from_rational(mpq_class(num(rng), den(rng))));
  return j;
}

template <Scalar F, bool Parallel>
void BM_Compose(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const auto f = random_jet<F>(2, order, 1);
  const auto g = random_jet<F>(2, order, 2);
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(compose(f, g, order));
    else
      benchmark::DoNotOptimize(compose_reference(f, g, order));
  }
}

}  // namespace

BENCHMARK(BM_Compose<FloatScalar, true>)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Compose<FloatScalar, false>)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Compose<ExactScalar, true>)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Compose<ExactScalar, false>)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
