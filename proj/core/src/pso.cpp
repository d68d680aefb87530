#include "glis/pso.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "glis/error.hpp"
#include "glis/random.hpp"

namespace glis {

int PsoConfig::resolved_iterations(Eigen::Index n) const {
  if (iterations > 0) return iterations;
  return static_cast<int>(std::min<Eigen::Index>(200 * n, 2000));
}

void PsoConfig::validate() const {
  if (swarm_size < 2) throw Error(ErrorKind::kInvalidArgument, "pso: swarm_size must be >= 2");
  if (iterations < 0) throw Error(ErrorKind::kInvalidArgument, "pso: iterations must be >= 1");
}

PsoResult pso_minimize(const std::function<double(const Vector&)>& objective, const Vector& lower,
                       const Vector& upper, const PsoConfig& config) {
  config.validate();
  const Eigen::Index n = lower.size();
  if (upper.size() != n || n == 0) {
    throw Error(ErrorKind::kDimensionMismatch, "pso: bad box dimensions");
  }
  if (!lower.allFinite() || !upper.allFinite() || ((upper - lower).array() < 0.0).any()) {
    throw Error(ErrorKind::kInvalidArgument, "pso: box must be bounded and nonempty");
  }

  Rng rng(config.seed);
  const int m = config.swarm_size;
  const int iterations = config.resolved_iterations(n);
  const Vector range = upper - lower;

  Matrix pos(m, n), vel(m, n), best_pos(m, n);
  Vector best_val(m);
  for (int p = 0; p < m; ++p) {
    for (Eigen::Index j = 0; j < n; ++j) {
      pos(p, j) = rng.uniform(lower(j), upper(j));
      vel(p, j) = 0.5 * (rng.uniform(lower(j), upper(j)) - pos(p, j));
    }
  }

  PsoResult result;
  result.value = std::numeric_limits<double>::infinity();
  result.x = 0.5 * (lower + upper);
  Vector x(n);
  auto evaluate = [&](int p) {
    x = pos.row(p).transpose();
    double v = objective(x);
    ++result.evaluations;
    if (std::isnan(v)) v = std::numeric_limits<double>::infinity();
    return v;
  };

  for (int p = 0; p < m; ++p) {
    best_pos.row(p) = pos.row(p);
    best_val(p) = evaluate(p);
    if (best_val(p) < result.value) {
      result.value = best_val(p);
      result.x = pos.row(p).transpose();
    }
  }

  for (int it = 0; it < iterations; ++it) {
    for (int p = 0; p < m; ++p) {
      for (Eigen::Index j = 0; j < n; ++j) {
        const double r1 = rng.uniform();
        const double r2 = rng.uniform();
        double v = config.inertia * vel(p, j) +
                   config.cognitive * r1 * (best_pos(p, j) - pos(p, j)) +
                   config.social * r2 * (result.x(j) - pos(p, j));
        v = std::clamp(v, -range(j), range(j));
        double xj = pos(p, j) + v;
        if (xj < lower(j)) {
          xj = lower(j);
          v = 0.0;
        } else if (xj > upper(j)) {
          xj = upper(j);
          v = 0.0;
        }
        pos(p, j) = xj;
        vel(p, j) = v;
      }
      const double value = evaluate(p);
      if (value < best_val(p)) {
        best_val(p) = value;
        best_pos.row(p) = pos.row(p);
        if (value < result.value) {
          result.value = value;
          result.x = pos.row(p).transpose();
        }
      }
    }
  }
  result.swarm = std::move(pos);
  return result;
}

}  // namespace glis
