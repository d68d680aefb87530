#include "glis/problem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "glis/error.hpp"

namespace glis {

void ProblemSpec::validate() const {
  const Eigen::Index n = lower.size();
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "problem has zero variables");
  if (upper.size() != n) throw Error(ErrorKind::kDimensionMismatch, "lower/upper size mismatch");
  if (!lower.allFinite() || !upper.allFinite()) {
    throw Error(ErrorKind::kNonFinite, "bounds must be finite");
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    if (!(lower(j) < upper(j))) {
      throw Error(ErrorKind::kDegenerateBox, "lower >= upper in coordinate " + std::to_string(j));
    }
  }
  if (lin_A.has_value() != lin_b.has_value()) {
    throw Error(ErrorKind::kInvalidArgument, "lin_A and lin_b must be given together");
  }
  if (lin_A) {
    if (lin_A->cols() != n || lin_A->rows() != lin_b->size()) {
      throw Error(ErrorKind::kDimensionMismatch, "linear constraint shape mismatch");
    }
    if (!lin_A->allFinite() || !lin_b->allFinite()) {
      throw Error(ErrorKind::kNonFinite, "linear constraints must be finite");
    }
  }
}

Vector ProblemSpec::constraint_values(const Vector& x) const {
  Vector lin;
  if (lin_A) lin = (*lin_A) * x - *lin_b;
  Vector nonlin;
  if (constraint_fn) nonlin = constraint_fn(x);
  Vector out(lin.size() + nonlin.size());
  out << lin, nonlin;
  return out;
}

double ProblemSpec::max_violation(const Vector& x) const {
  if (!has_constraints()) return 0.0;
  const Vector g = constraint_values(x);
  return g.size() == 0 ? 0.0 : std::max(0.0, g.maxCoeff());
}

bool ProblemSpec::is_feasible(const Vector& x, double tol) const {
  return in_box(x, tol) && max_violation(x) <= tol;
}

bool ProblemSpec::in_box(const Vector& x, double tol) const {
  return ((x - lower).array() >= -tol).all() && ((upper - x).array() >= -tol).all();
}

std::pair<Vector, Vector> tighten_bounds(const ProblemSpec& spec) {
  spec.validate();
  Vector lo = spec.lower;
  Vector hi = spec.upper;
  if (!spec.lin_A) return {lo, hi};

  const Eigen::Index n = spec.dim();
  LpProblem lp;
  lp.ineq_lhs = *spec.lin_A;
  lp.ineq_rhs = *spec.lin_b;
  lp.lower = spec.lower;
  lp.upper = spec.upper;
  for (Eigen::Index i = 0; i < n; ++i) {
    lp.cost = Vector::Unit(n, i);
    try {
      lp.sense = LpSense::kMinimize;
      const double lo_i = solve_lp(lp).value;
      lp.sense = LpSense::kMaximize;
      const double hi_i = solve_lp(lp).value;
      lo(i) = std::max(lo(i), lo_i);
      hi(i) = std::min(hi(i), hi_i);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kInfeasible) {
        throw Error(ErrorKind::kInfeasibleConstraints,
                    "linear constraints do not intersect the box");
      }
      throw;
    }
    if (lo(i) > hi(i)) {
      throw Error(ErrorKind::kInfeasibleConstraints,
                  "empty tightened range in coordinate " + std::to_string(i));
    }
  }
  return {lo, hi};
}

ScalingMap ScalingMap::build(const Vector& lower, const Vector& upper,
                             const std::optional<Matrix>& lin_A,
                             const std::optional<Vector>& lin_b) {
  if (lower.size() != upper.size()) {
    throw Error(ErrorKind::kDimensionMismatch, "ScalingMap: lower/upper size mismatch");
  }
  if (lin_A.has_value() != lin_b.has_value()) {
    throw Error(ErrorKind::kInvalidArgument, "ScalingMap: lin_A and lin_b must be given together");
  }
  for (Eigen::Index j = 0; j < lower.size(); ++j) {
    if (!(upper(j) > lower(j))) {
      throw Error(ErrorKind::kDegenerateBox,
                  "ScalingMap: zero-width range in coordinate " + std::to_string(j));
    }
  }
  ScalingMap map;
  map.lower_ = lower;
  map.upper_ = upper;
  map.center_ = 0.5 * (upper + lower);
  map.half_width_ = 0.5 * (upper - lower);
  if (lin_A) {
    if (lin_A->cols() != lower.size() || lin_A->rows() != lin_b->size()) {
      throw Error(ErrorKind::kDimensionMismatch, "ScalingMap: linear constraint shape mismatch");
    }
    map.scaled_A_ = (*lin_A) * map.half_width_.asDiagonal();
    map.scaled_b_ = *lin_b - (*lin_A) * map.center_;
  }
  return map;
}

Vector ScalingMap::to_original(const Vector& x_bar) const {
  Vector x = x_bar.cwiseProduct(half_width_) + center_;
  // Pin the box corners so that +-1 reproduce the bounds bit-for-bit.
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    if (x_bar(j) == 1.0) x(j) = upper_(j);
    if (x_bar(j) == -1.0) x(j) = lower_(j);
  }
  return x;
}

Vector ScalingMap::to_scaled(const Vector& x) const {
  return (x - center_).cwiseQuotient(half_width_);
}

}  // namespace glis
