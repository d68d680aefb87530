#include "glis/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "glis/acquisition.hpp"
#include "glis/error.hpp"

namespace glis {

Matrix latin_hypercube(Eigen::Index n, Eigen::Index count, const Vector& lower,
                       const Vector& upper, Rng& rng) {
  if (count < 1) throw Error(ErrorKind::kInvalidArgument, "latin_hypercube: count must be >= 1");
  if (lower.size() != n || upper.size() != n) {
    throw Error(ErrorKind::kDimensionMismatch, "latin_hypercube: bounds do not match n");
  }
  Matrix x(count, n);
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(count));
  const double inv_count = 1.0 / static_cast<double>(count);
  for (Eigen::Index j = 0; j < n; ++j) {
    std::iota(perm.begin(), perm.end(), Eigen::Index{0});
    for (std::size_t i = perm.size() - 1; i > 0; --i) {
      std::swap(perm[i], perm[rng.index(i + 1)]);
    }
    const double width = upper(j) - lower(j);
    for (Eigen::Index i = 0; i < count; ++i) {
      const double u = (static_cast<double>(perm[static_cast<std::size_t>(i)]) + rng.uniform()) *
                       inv_count;
      x(i, j) = std::min(lower(j) + width * u, upper(j));
    }
  }
  return x;
}

Matrix latin_hypercube(Eigen::Index n, Eigen::Index count, const Vector& lower,
                       const Vector& upper, std::uint64_t seed) {
  Rng rng(seed);
  return latin_hypercube(n, count, lower, upper, rng);
}

double chebyshev_radius(const ProblemSpec& spec) {
  spec.validate();
  const Eigen::Index n = spec.dim();
  const Eigen::Index q = spec.lin_A ? spec.lin_A->rows() : 0;

  // Variables (x, r); maximize r.
  LpProblem lp;
  lp.cost = Vector::Unit(n + 1, n);
  lp.sense = LpSense::kMaximize;
  lp.lower.resize(n + 1);
  lp.upper.resize(n + 1);
  lp.lower << spec.lower, 0.0;
  lp.upper << spec.upper, std::numeric_limits<double>::infinity();
  lp.ineq_lhs = Matrix::Zero(q + 2 * n, n + 1);
  lp.ineq_rhs.resize(q + 2 * n);
  for (Eigen::Index i = 0; i < q; ++i) {
    lp.ineq_lhs.row(i).head(n) = spec.lin_A->row(i);
    lp.ineq_lhs(i, n) = spec.lin_A->row(i).norm();
    lp.ineq_rhs(i) = (*spec.lin_b)(i);
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    lp.ineq_lhs(q + 2 * j, j) = 1.0;
    lp.ineq_lhs(q + 2 * j, n) = 1.0;
    lp.ineq_rhs(q + 2 * j) = spec.upper(j);
    lp.ineq_lhs(q + 2 * j + 1, j) = -1.0;
    lp.ineq_lhs(q + 2 * j + 1, n) = 1.0;
    lp.ineq_rhs(q + 2 * j + 1) = -spec.lower(j);
  }
  return solve_lp(lp).value;
}

Matrix constrained_lhs(const ProblemSpec& spec, Eigen::Index n_init, std::uint64_t seed) {
  spec.validate();
  if (n_init < 1) throw Error(ErrorKind::kInvalidArgument, "constrained_lhs: n_init must be >= 1");
  const Eigen::Index n = spec.dim();
  Rng rng(seed);
  if (!spec.has_constraints()) return latin_hypercube(n, n_init, spec.lower, spec.upper, rng);

  if (spec.lin_A) {
    double radius = 0.0;
    try {
      radius = chebyshev_radius(spec);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kInfeasible) throw;
      throw Error(ErrorKind::kNotFullDimensional, "constrained_lhs: feasible set is empty");
    }
    if (!(radius > 0.0)) {
      throw Error(ErrorKind::kNotFullDimensional, "constrained_lhs: Chebyshev radius is zero");
    }
  }

  // Memory guard on the oversampled design.
  constexpr Eigen::Index kMaxDesign = 2'000'000;
  Eigen::Index count = n_init;
  for (int round = 0; round < kMaxOversamplingRounds; ++round) {
    const Matrix design = latin_hypercube(n, count, spec.lower, spec.upper, rng);
    Matrix kept(n_init, n);
    Eigen::Index feasible = 0;
    for (Eigen::Index i = 0; i < count; ++i) {
      const Vector x = design.row(i).transpose();
      if (!spec.is_feasible(x, 0.0)) continue;
      if (feasible < n_init) kept.row(feasible) = x.transpose();
      ++feasible;
    }
    if (feasible >= n_init) return kept;

    double next = 0.0;
    if (feasible > 0) {
      next = std::ceil(std::min(20.0, 1.1 * static_cast<double>(n_init) /
                                          static_cast<double>(feasible)) *
                       static_cast<double>(count));
    } else {
      next = 20.0 * static_cast<double>(count);
    }
    count = std::min(static_cast<Eigen::Index>(next), std::max(kMaxDesign / n, n_init));
  }
  throw Error(ErrorKind::kLowFeasibleVolume,
              "constrained_lhs: fewer than " + std::to_string(n_init) + " feasible points after " +
                  std::to_string(kMaxOversamplingRounds) + " rounds");
}

Matrix idw_feasible_init(const ProblemSpec& spec, const Vector& first, Eigen::Index n_init,
                         const PsoConfig& pso, IdwWeightKind kind) {
  spec.validate();
  if (n_init < 1) throw Error(ErrorKind::kInvalidArgument, "idw_feasible_init: n_init must be >= 1");
  if (first.size() != spec.dim()) {
    throw Error(ErrorKind::kDimensionMismatch, "idw_feasible_init: first point has wrong size");
  }
  if (!spec.is_feasible(first)) {
    throw Error(ErrorKind::kInvalidArgument, "idw_feasible_init: first point is infeasible");
  }

  SampleSet samples(spec.dim());
  samples.append(first, 0.0);
  for (Eigen::Index k = 1; k < n_init; ++k) {
    // Any feasible point (value in (-1, 0]) beats every infeasible one (> 1).
    auto objective = [&](const Vector& x) {
      const double violation = spec.max_violation(x);
      if (violation > 0.0) return 1.0 + violation;
      return -idw_distance(samples, x, kind);
    };
    PsoConfig cfg = pso;
    cfg.seed = derive_seed(pso.seed, static_cast<std::uint64_t>(k));
    const PsoResult best = pso_minimize(objective, spec.lower, spec.upper, cfg);
    if (best.value > 0.0 || samples.find(best.x)) {
      throw Error(ErrorKind::kLowFeasibleVolume,
                  "idw_feasible_init: no new feasible point found");
    }
    samples.append(best.x, 0.0);
  }
  return samples.X;
}

}  // namespace glis
