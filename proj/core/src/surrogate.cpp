#include "glis/surrogate.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "glis/error.hpp"

namespace glis {

SampleSet::SampleSet(Matrix x, Vector f) : X(std::move(x)), F(std::move(f)) {
  if (X.rows() != F.size()) {
    throw Error(ErrorKind::kDimensionMismatch, "SampleSet: X has " + std::to_string(X.rows()) +
                                                   " rows but F has " + std::to_string(F.size()));
  }
}

void SampleSet::append(const Vector& x, double f) {
  if (x.size() != X.cols()) {
    throw Error(ErrorKind::kDimensionMismatch, "SampleSet::append: wrong point dimension");
  }
  const Eigen::Index n = X.rows();
  X.conservativeResize(n + 1, Eigen::NoChange);
  X.row(n) = x.transpose();
  F.conservativeResize(n + 1);
  F(n) = f;
}

std::optional<Eigen::Index> SampleSet::find(const Vector& x) const {
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    if ((X.row(i).transpose().array() == x.array()).all()) return i;
  }
  return std::nullopt;
}

Vector SampleSet::squared_distances(const Vector& x) const {
  return (X.rowwise() - x.transpose()).rowwise().squaredNorm();
}

std::string_view to_string(IdwWeightKind kind) {
  switch (kind) {
    case IdwWeightKind::kInverseSquared: return "inverse_squared";
    case IdwWeightKind::kExpInverseSquared: return "exp_inverse_squared";
  }
  return "unknown";
}

double idw_weight(const Vector& x, const Vector& xi, IdwWeightKind kind) {
  const double d2 = (x - xi).squaredNorm();
  if (d2 == 0.0) throw Error(ErrorKind::kCoincidentPoint, "idw_weight: x equals the sample");
  return kind == IdwWeightKind::kInverseSquared ? 1.0 / d2 : std::exp(-d2) / d2;
}

IdwWeights idw_weights_from_squared(const Vector& d2, IdwWeightKind kind) {
  IdwWeights out;
  const Eigen::Index n = d2.size();
  out.v = Vector::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (d2(i) == 0.0) {
      out.coincident = i;
      out.v(i) = 1.0;
      out.weight_sum = std::numeric_limits<double>::infinity();
      return out;
    }
  }
  if (n == 0) return out;

  if (kind == IdwWeightKind::kInverseSquared) {
    for (Eigen::Index i = 0; i < n; ++i) out.v(i) = 1.0 / std::max(d2(i), kMinSquaredDistance);
    out.weight_sum = out.v.sum();
    out.v /= out.weight_sum;
  } else {
    // exp(-d2) is shifted by the nearest sample so the ratios never underflow.
    const double d2_min = std::max(d2.minCoeff(), kMinSquaredDistance);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double di = std::max(d2(i), kMinSquaredDistance);
      out.v(i) = std::exp(d2_min - di) / di;
    }
    const double shifted_sum = out.v.sum();
    out.v /= shifted_sum;
    out.weight_sum = std::exp(-d2_min) * shifted_sum;
  }
  return out;
}

IdwWeights idw_weights(const SampleSet& samples, const Vector& x, IdwWeightKind kind) {
  Vector d2 = samples.squared_distances(x);
  // Exact zero distance must mean exact coordinate equality.
  for (Eigen::Index i = 0; i < d2.size(); ++i) {
    if (d2(i) == 0.0 && !(samples.X.row(i).transpose().array() == x.array()).all()) {
      d2(i) = kMinSquaredDistance;
    }
  }
  return idw_weights_from_squared(d2, kind);
}

double idw_predict(const SampleSet& samples, const Vector& x, IdwWeightKind kind) {
  if (samples.empty()) throw Error(ErrorKind::kInvalidArgument, "idw_predict: no samples");
  const IdwWeights w = idw_weights(samples, x, kind);
  if (w.coincident) return samples.F(*w.coincident);
  return w.v.dot(samples.F);
}

std::string_view to_string(RbfKernel kernel) {
  switch (kernel) {
    case RbfKernel::kInverseQuadratic: return "inverse_quadratic";
    case RbfKernel::kGaussian: return "gaussian";
    case RbfKernel::kMultiquadric: return "multiquadric";
    case RbfKernel::kThinPlateSpline: return "thin_plate_spline";
    case RbfKernel::kLinear: return "linear";
    case RbfKernel::kInverseMultiquadric: return "inverse_multiquadric";
  }
  return "unknown";
}

std::optional<RbfKernel> parse_rbf_kernel(std::string_view name) {
  for (RbfKernel k : {RbfKernel::kInverseQuadratic, RbfKernel::kGaussian,
                      RbfKernel::kMultiquadric, RbfKernel::kThinPlateSpline, RbfKernel::kLinear,
                      RbfKernel::kInverseMultiquadric}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

double rbf_kernel(const RbfKind& kind, double d) {
  const double r = kind.epsilon * d;
  const double r2 = r * r;
  switch (kind.kernel) {
    case RbfKernel::kInverseQuadratic: return 1.0 / (1.0 + r2);
    case RbfKernel::kGaussian: return std::exp(-r2);
    case RbfKernel::kMultiquadric: return std::sqrt(1.0 + r2);
    case RbfKernel::kThinPlateSpline: return r <= 1e-300 ? 0.0 : r2 * std::log(r);
    case RbfKernel::kLinear: return r;
    case RbfKernel::kInverseMultiquadric: return 1.0 / std::sqrt(1.0 + r2);
  }
  return 0.0;
}

RbfModel RbfModel::fit(SampleSet samples, RbfKind kind, double eps_svd) {
  if (samples.empty()) throw Error(ErrorKind::kInvalidArgument, "rbf_fit: no samples");
  if (!(kind.epsilon > 0.0)) throw Error(ErrorKind::kInvalidArgument, "rbf_fit: epsilon <= 0");
  const Eigen::Index n = samples.size();
  RbfModel model;
  model.kind_ = kind;
  model.eps_svd_ = eps_svd;
  model.kernel_matrix_.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    model.kernel_matrix_(i, i) = rbf_kernel(kind, 0.0);
    for (Eigen::Index j = 0; j < i; ++j) {
      const double d = (samples.X.row(i) - samples.X.row(j)).norm();
      model.kernel_matrix_(i, j) = model.kernel_matrix_(j, i) = rbf_kernel(kind, d);
    }
  }
  model.beta_ = svd_truncated_solve(model.kernel_matrix_, samples.F, eps_svd);
  model.samples_ = std::move(samples);
  return model;
}

RbfModel RbfModel::update(const Vector& x_new, double f_new) const {
  if (samples_.find(x_new)) {
    throw Error(ErrorKind::kDuplicatePoint, "rbf_update: point already sampled");
  }
  RbfModel model;
  model.kind_ = kind_;
  model.eps_svd_ = eps_svd_;
  model.samples_ = samples_;
  model.samples_.append(x_new, f_new);

  const Eigen::Index n = samples_.size();
  model.kernel_matrix_.resize(n + 1, n + 1);
  model.kernel_matrix_.topLeftCorner(n, n) = kernel_matrix_;
  for (Eigen::Index j = 0; j < n; ++j) {
    const double d = (model.samples_.X.row(n) - model.samples_.X.row(j)).norm();
    model.kernel_matrix_(n, j) = model.kernel_matrix_(j, n) = rbf_kernel(kind_, d);
  }
  model.kernel_matrix_(n, n) = rbf_kernel(kind_, 0.0);
  model.beta_ = svd_truncated_solve(model.kernel_matrix_, model.samples_.F, eps_svd_);
  return model;
}

double RbfModel::predict_from_squared(const Vector& d2) const {
  double value = 0.0;
  for (Eigen::Index i = 0; i < d2.size(); ++i) {
    value += beta_(i) * rbf_kernel(kind_, std::sqrt(d2(i)));
  }
  return value;
}

double RbfModel::predict(const Vector& x) const {
  return predict_from_squared(samples_.squared_distances(x));
}

double surrogate_predict(const Surrogate& s, const Vector& x) {
  return std::visit([&](const auto& m) { return m.predict(x); }, s);
}

const SampleSet& surrogate_samples(const Surrogate& s) {
  return std::visit(
      [](const auto& m) -> const SampleSet& {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, RbfModel>) {
          return m.samples();
        } else {
          return m.samples;
        }
      },
      s);
}

}  // namespace glis
