#include "glis/self_tuning.hpp"

#include <algorithm>
#include <limits>

#include "glis/benchmark_problems.hpp"
#include "glis/error.hpp"
#include "glis/glis.hpp"
#include "glis/random.hpp"

namespace glis {

double self_tuning_score(const std::vector<std::vector<double>>& histories, int n_max) {
  if (n_max < 2 || n_max % 2 != 0) {
    throw Error(ErrorKind::kInvalidArgument, "self_tuning_score: n_max must be even and >= 2");
  }
  const int half = n_max / 2;
  double total = 0.0;
  for (const auto& f : histories) {
    if (static_cast<int>(f.size()) < n_max) {
      throw Error(ErrorKind::kDimensionMismatch, "self_tuning_score: history shorter than n_max");
    }
    double running = std::numeric_limits<double>::infinity();
    for (int k = 0; k < half; ++k) running = std::min(running, f[static_cast<std::size_t>(k)]);
    // h = 0 uses the first `half` values; each further h adds one more.
    for (int h = 0; h <= half; ++h) {
      if (h > 0) running = std::min(running, f[static_cast<std::size_t>(half + h - 1)]);
      total += static_cast<double>(h + 1) * running;
    }
  }
  return total;
}

double self_tuning_objective(double alpha, double delta, double epsilon,
                             const SelfTuningOptions& options, std::uint64_t seed) {
  if (options.n_tests < 1) {
    throw Error(ErrorKind::kInvalidArgument, "self_tuning_objective: n_tests must be >= 1");
  }
  const BenchmarkProblem problem = get_benchmark("f1d");
  GlisConfig cfg;
  cfg.acquisition.alpha = alpha;
  cfg.acquisition.delta = delta;
  cfg.rbf = {RbfKernel::kInverseQuadratic, epsilon};
  cfg.n_max = options.n_max;
  cfg.n_init = std::min(options.n_init, options.n_max);
  cfg.divide_hyperparams_by_n = false;

  std::vector<std::vector<double>> histories;
  histories.reserve(static_cast<std::size_t>(options.n_tests));
  for (int i = 0; i < options.n_tests; ++i) {
    cfg.seed = derive_seed(seed, static_cast<std::uint64_t>(i));
    const GlisResult run = glis_run(problem.spec, cfg);
    histories.emplace_back(run.values.data(), run.values.data() + run.values.size());
  }
  return self_tuning_score(histories, options.n_max);
}

}  // namespace glis
