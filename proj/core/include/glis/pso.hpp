#pragma once

#include <cstdint>
#include <functional>

#include "glis/numerics.hpp"

namespace glis {

/// Global-best particle swarm with constriction-style coefficients.
struct PsoConfig {
  int swarm_size = 30;
  /// 0 selects 200 * n iterations, capped at 2000.
  int iterations = 0;
  double inertia = 0.729;
  double cognitive = 1.494;
  double social = 1.494;
  std::uint64_t seed = 0;

  int resolved_iterations(Eigen::Index n) const;
  void validate() const;
};

struct PsoResult {
  Vector x;
  double value = 0.0;
  /// Final particle positions, one per row.
  Matrix swarm;
  long evaluations = 0;
};

/// Minimizes `objective` over the box [lower, upper]. Deterministic given the
/// seed; every evaluated point lies inside the box.
PsoResult pso_minimize(const std::function<double(const Vector&)>& objective, const Vector& lower,
                       const Vector& upper, const PsoConfig& config);

}  // namespace glis
