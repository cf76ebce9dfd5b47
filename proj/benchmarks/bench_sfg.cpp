#include <benchmark/benchmark.h>

#include <vector>

#include "sfg/fg1d.hpp"
#include "sfg/fg2d.hpp"
#include "sfg/kernel.hpp"
#include "sfg/sfg.hpp"
#include "sfg/synth.hpp"

namespace {

using namespace sfg;

void BM_ExactOrthogonal(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = gen_uniform(n, 1);
  const auto b = gen_uniform(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(sfg_exact(a, b, 1.0, Projection::orthogonal));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExactOrthogonal)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_ExactContinuous(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = gen_uniform(n, 1);
  const auto b = gen_uniform(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(sfg_exact(a, b, 1.0, Projection::continuous));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExactContinuous)->RangeMultiplier(2)->Range(16, 128)->Complexity();

void BM_Approx(benchmark::State& state) {
  const auto a = gen_uniform(100, 1);
  const auto b = gen_uniform(100, 2);
  SfgConfig cfg;
  cfg.mode = Mode::approx;
  cfg.samples = static_cast<int>(state.range(0));
  cfg.sampling = static_cast<Sampling>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(sfg::sfg(a, b, cfg));
}
BENCHMARK(BM_Approx)->ArgsProduct({{20, 100, 1000}, {0, 1, 2}});

void BM_Fg1d(benchmark::State& state) {
  Rng rng(3);
  std::vector<Atom> xs, ys;
  for (int i = 0; i < state.range(0); ++i) {
    xs.push_back({rng.uniform(0.01, 1.0), rng.uniform(0.5, 2.0)});
    ys.push_back({rng.uniform(0.01, 1.0), rng.uniform(0.5, 2.0)});
  }
  const Projected1DMeasure a(xs), b(ys);
  for (auto _ : state) benchmark::DoNotOptimize(fg1d(a, b, 2.0));
}
BENCHMARK(BM_Fg1d)->Range(8, 4096);

void BM_Fg2d(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = gen_uniform(n, 1);
  const auto b = gen_uniform(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(fg2d(a, b, 1.0).distance);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Fg2d)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_GramExact(benchmark::State& state) {
  std::vector<PersistenceMeasure> corpus;
  for (int i = 0; i < state.range(0); ++i) corpus.push_back(gen_uniform(50, static_cast<std::uint64_t>(i)));
  for (auto _ : state) benchmark::DoNotOptimize(gram(corpus, 1.0, SfgConfig{}));
}
BENCHMARK(BM_GramExact)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_Eigenvalues(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(5);
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = rng.uniform(-1.0, 1.0);
  }
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_eigenvalues(m));
}
BENCHMARK(BM_Eigenvalues)->Arg(20)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
