#include <benchmark/benchmark.h>

#include "nevlab/convolutions.hpp"
#include "nevlab/sampling.hpp"

namespace {

nevlab::DiscreteMeasure sized(nevlab::sampling::Rng& rng, int n) {
  nevlab::sampling::MeasureShape shape;
  shape.min_atoms = shape.max_atoms = n;
  return nevlab::sampling::random_probability_measure(rng, shape);
}

void BM_BooleanConvolve(benchmark::State& state) {
  nevlab::sampling::Rng rng(4);
  const auto a = sized(rng, static_cast<int>(state.range(0)));
  const auto b = sized(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nevlab::convolutions::boolean_convolve(a, b));
}
BENCHMARK(BM_BooleanConvolve)->DenseRange(2, 6, 2);

void BM_BooleanPower(benchmark::State& state) {
  nevlab::sampling::Rng rng(5);
  const auto a = sized(rng, 4);
  for (auto _ : state) benchmark::DoNotOptimize(nevlab::convolutions::boolean_power(a, 2.5));
}
BENCHMARK(BM_BooleanPower);

void BM_Subordination(benchmark::State& state) {
  nevlab::sampling::Rng rng(6);
  const auto a = sized(rng, static_cast<int>(state.range(0)));
  const auto b = sized(rng, static_cast<int>(state.range(0)));
  const nevlab::Complex z(0.0, static_cast<double>(state.range(1)) / 4.0);
  for (auto _ : state) benchmark::DoNotOptimize(nevlab::convolutions::subordination(a, b, z));
}
BENCHMARK(BM_Subordination)->ArgsProduct({{2, 6}, {1, 4, 32}});

void BM_FreeVTransform(benchmark::State& state) {
  nevlab::sampling::Rng rng(7);
  const auto a = sized(rng, 4);
  const auto b = sized(rng, 4);
  const double s = 1.0 + std::max(a.max_abs_atom(), b.max_abs_atom());
  for (auto _ : state) benchmark::DoNotOptimize(nevlab::convolutions::free_v_transform(a, b, {0.0, 5.0 * s}));
}
BENCHMARK(BM_FreeVTransform);

}  // namespace
