#pragma once

#include <cstdint>
#include <vector>

namespace glis {

/// Sum over runs of  sum_{h=0}^{n_max/2} (h+1) * min(first n_max/2 + h values).
/// Each history must hold at least n_max values; n_max must be even and >= 2.
double self_tuning_score(const std::vector<std::vector<double>>& histories, int n_max);

struct SelfTuningOptions {
  int n_tests = 20;
  int n_max = 20;
  /// Initial samples of each inner run (clamped to n_max).
  int n_init = 8;
};

/// Meta-objective for tuning (alpha, delta, epsilon): runs GLIS n_tests times
/// on the one-dimensional test function over [-3, 3] with an
/// inverse-quadratic RBF and scores the observed values with
/// self_tuning_score. Hyperparameters are used as given (no division by n).
double self_tuning_objective(double alpha, double delta, double epsilon,
                             const SelfTuningOptions& options, std::uint64_t seed);

inline double self_tuning_objective(double alpha, double delta, double epsilon,
                                    std::uint64_t seed) {
  return self_tuning_objective(alpha, delta, epsilon, SelfTuningOptions{}, seed);
}

}  // namespace glis
