#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "glis/numerics.hpp"

namespace glis {

using Objective = std::function<double(const Vector&)>;
/// Vector constraint g(x) <= 0 componentwise.
using ConstraintFn = std::function<Vector(const Vector&)>;

/// Box-bounded problem  min f(x)  s.t. lower <= x <= upper, A x <= b, g(x) <= 0.
struct ProblemSpec {
  Vector lower;
  Vector upper;
  std::optional<Matrix> lin_A;
  std::optional<Vector> lin_b;
  ConstraintFn constraint_fn;
  Objective objective;
  /// true: f may be evaluated at infeasible points, so the initial design need
  /// not be filtered for feasibility.
  bool eval_outside_feasible = true;

  Eigen::Index dim() const { return lower.size(); }
  bool has_linear() const { return lin_A.has_value(); }
  bool has_constraints() const { return has_linear() || static_cast<bool>(constraint_fn); }

  /// Throws kInvalidArgument / kDimensionMismatch / kDegenerateBox.
  void validate() const;

  /// Stacked constraint values [A x - b; g(x)]; empty when unconstrained.
  Vector constraint_values(const Vector& x) const;

  /// Largest positive entry of constraint_values(x), or 0.
  double max_violation(const Vector& x) const;

  bool is_feasible(const Vector& x, double tol = 1e-9) const;

  bool in_box(const Vector& x, double tol = 0.0) const;
};

/// Shrinks the box to the bounding box of the linear feasible set (2n LPs).
/// Returns the bounds unchanged when there are no linear constraints.
/// Throws kInfeasibleConstraints if the polytope misses the box.
std::pair<Vector, Vector> tighten_bounds(const ProblemSpec& spec);

/// Affine map between original x and scaled x_bar in [-1, 1]^n:
///   x = x_bar .* half_width + center.
class ScalingMap {
 public:
  ScalingMap() = default;

  /// Throws kDegenerateBox when some upper <= lower.
  static ScalingMap build(const Vector& lower, const Vector& upper,
                          const std::optional<Matrix>& lin_A = std::nullopt,
                          const std::optional<Vector>& lin_b = std::nullopt);

  Vector to_original(const Vector& x_bar) const;
  Vector to_scaled(const Vector& x) const;

  const Vector& center() const { return center_; }
  const Vector& half_width() const { return half_width_; }
  /// A * diag(half_width), present when linear constraints were given.
  const std::optional<Matrix>& scaled_A() const { return scaled_A_; }
  /// b - A * center.
  const std::optional<Vector>& scaled_b() const { return scaled_b_; }

  Eigen::Index dim() const { return center_.size(); }
  const Vector& lower() const { return lower_; }
  const Vector& upper() const { return upper_; }

 private:
  Vector lower_;
  Vector upper_;
  Vector center_;
  Vector half_width_;
  std::optional<Matrix> scaled_A_;
  std::optional<Vector> scaled_b_;
};

}  // namespace glis
