#include <benchmark/benchmark.h>

#include "glis/acquisition.hpp"
#include "glis/benchmark_problems.hpp"
#include "glis/glis.hpp"
#include "glis/random.hpp"
#include "glis/surrogate.hpp"

namespace {

glis::SampleSet random_samples(Eigen::Index n, Eigen::Index count, std::uint64_t seed) {
  glis::Rng rng(seed);
  glis::SampleSet s(n);
  while (s.size() < count) {
    glis::Vector x(n);
    for (Eigen::Index j = 0; j < n; ++j) x(j) = rng.uniform(-1.0, 1.0);
    s.append(x, x.squaredNorm() + std::sin(4.0 * x(0)));
  }
  return s;
}

void BM_RbfFit(benchmark::State& state) {
  const auto s = random_samples(4, state.range(0), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(glis::rbf_fit(s, {glis::RbfKernel::kInverseQuadratic, 1.0}));
  }
}
BENCHMARK(BM_RbfFit)->Arg(10)->Arg(40)->Arg(160);

void BM_RbfUpdate(benchmark::State& state) {
  const auto s = random_samples(4, state.range(0) + 1, 2);
  glis::SampleSet head(4);
  for (Eigen::Index i = 0; i < state.range(0); ++i) head.append(s.point(i), s.F(i));
  const auto model = glis::rbf_fit(head, {glis::RbfKernel::kInverseQuadratic, 1.0});
  const glis::Vector x = s.point(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(model.update(x, 0.5));
}
BENCHMARK(BM_RbfUpdate)->Arg(10)->Arg(40)->Arg(160);

void BM_AcquisitionEval(benchmark::State& state) {
  const auto s = random_samples(4, state.range(0), 3);
  const glis::Surrogate surrogate = glis::rbf_fit(s, {glis::RbfKernel::kInverseQuadratic, 1.0});
  const glis::AcquisitionFunction acq(surrogate, glis::AcquisitionParams{});
  const glis::Vector x = glis::Vector::Constant(4, 0.123);
  for (auto _ : state) benchmark::DoNotOptimize(acq(x));
}
BENCHMARK(BM_AcquisitionEval)->Arg(10)->Arg(40)->Arg(160);

void BM_SuggestStep(benchmark::State& state) {
  const auto problem = glis::get_benchmark("hartman3");
  glis::GlisConfig cfg;
  cfg.n_init = static_cast<int>(state.range(0));
  cfg.n_max = cfg.n_init + 1;
  const glis::Glis initialized = glis::Glis::initialize(problem.spec, cfg);
  for (auto _ : state) {
    glis::Glis g = initialized;
    benchmark::DoNotOptimize(g.suggest());
  }
}
BENCHMARK(BM_SuggestStep)->Arg(6)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
