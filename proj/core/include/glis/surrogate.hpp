#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "glis/numerics.hpp"

namespace glis {

/// Evaluated points (one per row of X) and their observed values F.
struct SampleSet {
  Matrix X;
  Vector F;

  SampleSet() = default;
  SampleSet(Matrix x, Vector f);
  /// Empty set in n dimensions.
  explicit SampleSet(Eigen::Index n) : X(0, n), F(0) {}

  Eigen::Index size() const { return X.rows(); }
  Eigen::Index dim() const { return X.cols(); }
  bool empty() const { return X.rows() == 0; }

  void append(const Vector& x, double f);
  Vector point(Eigen::Index i) const { return X.row(i).transpose(); }

  /// Index of a row exactly equal to x, if any.
  std::optional<Eigen::Index> find(const Vector& x) const;

  /// Squared distances from x to every sample.
  Vector squared_distances(const Vector& x) const;
};

// ---------------------------------------------------------------------------
// Inverse distance weighting

enum class IdwWeightKind {
  kInverseSquared,     // 1 / d^2
  kExpInverseSquared,  // exp(-d^2) / d^2
};

std::string_view to_string(IdwWeightKind kind);

/// Throws kCoincidentPoint when x == xi.
double idw_weight(const Vector& x, const Vector& xi, IdwWeightKind kind);

/// Normalized IDW weights v_i(x) for a query, plus the raw weight sum.
struct IdwWeights {
  /// Set when the query coincides exactly with a sample; v is then the unit
  /// vector on that sample and weight_sum is +inf.
  std::optional<Eigen::Index> coincident;
  Vector v;
  double weight_sum = 0.0;
};

/// Smallest squared distance used in the weight formulas; queries closer than
/// this to a sample (but not equal to it) are clamped.
inline constexpr double kMinSquaredDistance = 1e-24;

IdwWeights idw_weights(const SampleSet& samples, const Vector& x, IdwWeightKind kind);
/// Same, from precomputed squared distances (exact zeros mark coincidence).
IdwWeights idw_weights_from_squared(const Vector& d2, IdwWeightKind kind);

/// IDW interpolant sum_i v_i(x) f_i.
double idw_predict(const SampleSet& samples, const Vector& x, IdwWeightKind kind);

struct IdwModel {
  IdwWeightKind kind = IdwWeightKind::kInverseSquared;
  SampleSet samples;

  double predict(const Vector& x) const { return idw_predict(samples, x, kind); }
};

// ---------------------------------------------------------------------------
// Radial basis functions

enum class RbfKernel {
  kInverseQuadratic,
  kGaussian,
  kMultiquadric,
  kThinPlateSpline,
  kLinear,
  kInverseMultiquadric,
};

std::string_view to_string(RbfKernel kernel);
/// Parses the names printed by to_string ("inverse_quadratic", ...).
std::optional<RbfKernel> parse_rbf_kernel(std::string_view name);

struct RbfKind {
  RbfKernel kernel = RbfKernel::kInverseQuadratic;
  double epsilon = 1.0;
};

/// phi(epsilon * d). Thin plate spline returns its limit 0 at the origin.
double rbf_kernel(const RbfKind& kind, double d);

inline constexpr double kDefaultEpsSvd = 1e-6;

class RbfModel {
 public:
  /// Fits beta from M beta = F by truncated SVD. Throws kInvalidArgument for
  /// an empty sample set or non-positive epsilon.
  static RbfModel fit(SampleSet samples, RbfKind kind, double eps_svd = kDefaultEpsSvd);

  /// New model with one more sample; the kernel matrix grows by a row and a
  /// column and beta is recomputed. Throws kDuplicatePoint.
  RbfModel update(const Vector& x_new, double f_new) const;

  double predict(const Vector& x) const;
  /// Prediction from squared distances to each sample.
  double predict_from_squared(const Vector& d2) const;

  const RbfKind& kind() const { return kind_; }
  const SampleSet& samples() const { return samples_; }
  const Vector& beta() const { return beta_; }
  const Matrix& kernel_matrix() const { return kernel_matrix_; }
  double eps_svd() const { return eps_svd_; }

 private:
  RbfKind kind_;
  SampleSet samples_;
  Vector beta_;
  double eps_svd_ = kDefaultEpsSvd;
  Matrix kernel_matrix_;
};

inline RbfModel rbf_fit(SampleSet samples, RbfKind kind, double eps_svd = kDefaultEpsSvd) {
  return RbfModel::fit(std::move(samples), kind, eps_svd);
}
inline RbfModel rbf_update(const RbfModel& model, const Vector& x_new, double f_new) {
  return model.update(x_new, f_new);
}
inline double rbf_predict(const RbfModel& model, const Vector& x) { return model.predict(x); }

using Surrogate = std::variant<RbfModel, IdwModel>;

double surrogate_predict(const Surrogate& s, const Vector& x);
const SampleSet& surrogate_samples(const Surrogate& s);

}  // namespace glis
