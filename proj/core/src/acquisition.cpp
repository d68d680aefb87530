#include "glis/acquisition.hpp"

#include <cmath>
#include <numbers>

#include "glis/error.hpp"

namespace glis {
namespace {

double variance_from_weights(const IdwWeights& w, const Vector& F, double fhat) {
  if (w.coincident) return std::abs(F(*w.coincident) - fhat);
  return std::sqrt(std::max(0.0, w.v.dot((F.array() - fhat).square().matrix())));
}

double distance_from_weights(const IdwWeights& w) {
  if (w.coincident) return 0.0;
  return 2.0 / std::numbers::pi * std::atan(1.0 / w.weight_sum);
}

void require_samples(const SampleSet& samples, const char* where) {
  if (samples.empty()) throw Error(ErrorKind::kInvalidArgument, std::string(where) + ": no samples");
}

}  // namespace

void AcquisitionParams::validate() const {
  if (!(alpha >= 0.0) || !(delta >= 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "acquisition: alpha and delta must be >= 0");
  }
  if (!(eps_delta_f > 0.0) || !(penalty_rho > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "acquisition: eps_delta_f and rho must be > 0");
  }
}

double idw_variance(const SampleSet& samples, double surrogate_value, const Vector& x,
                    IdwWeightKind kind) {
  require_samples(samples, "idw_variance");
  return variance_from_weights(idw_weights(samples, x, kind), samples.F, surrogate_value);
}

double idw_distance(const SampleSet& samples, const Vector& x, IdwWeightKind kind) {
  require_samples(samples, "idw_distance");
  return distance_from_weights(idw_weights(samples, x, kind));
}

double observed_range(const Vector& F, double eps_delta_f) {
  if (F.size() == 0) return eps_delta_f;
  return std::max(F.maxCoeff() - F.minCoeff(), eps_delta_f);
}

double acquisition(const Surrogate& surrogate, const SampleSet& samples, const Vector& x,
                   const AcquisitionParams& params) {
  require_samples(samples, "acquisition");
  const double fhat = surrogate_predict(surrogate, x);
  const double s = params.alpha == 0.0 ? 0.0 : idw_variance(samples, fhat, x, params.variance_kind);
  const double z = params.delta == 0.0 ? 0.0 : idw_distance(samples, x, params.distance_kind);
  return fhat - params.alpha * s - params.delta * observed_range(samples.F, params.eps_delta_f) * z;
}

double constraint_penalty(const Vector& g, double rho, double delta_f) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < g.size(); ++i) {
    const double v = std::max(g(i), 0.0);
    sum += v * v;
  }
  return rho * delta_f * sum;
}

double penalized_acquisition(const Surrogate& surrogate, const SampleSet& samples,
                             const Vector& x, const AcquisitionParams& params,
                             const ConstraintFn& constraints) {
  const double a = acquisition(surrogate, samples, x, params);
  if (!constraints) return a;
  return a + constraint_penalty(constraints(x), params.penalty_rho,
                                observed_range(samples.F, params.eps_delta_f));
}

AcquisitionFunction::AcquisitionFunction(const Surrogate& surrogate,
                                         const AcquisitionParams& params)
    : surrogate_(surrogate),
      samples_(surrogate_samples(surrogate)),
      params_(params),
      delta_f_(observed_range(surrogate_samples(surrogate).F, params.eps_delta_f)) {
  params_.validate();
  require_samples(samples_, "AcquisitionFunction");
}

AcquisitionFunction::Terms AcquisitionFunction::terms(const Vector& x) const {
  Terms t;
  Vector d2 = samples_.squared_distances(x);
  for (Eigen::Index i = 0; i < d2.size(); ++i) {
    if (d2(i) == 0.0 && !(samples_.X.row(i).transpose().array() == x.array()).all()) {
      d2(i) = kMinSquaredDistance;
    }
  }

  const IdwWeights w_var = idw_weights_from_squared(d2, params_.variance_kind);
  if (const auto* rbf = std::get_if<RbfModel>(&surrogate_)) {
    t.surrogate = rbf->predict_from_squared(d2);
  } else {
    const auto& idw = std::get<IdwModel>(surrogate_);
    const IdwWeights w = idw.kind == params_.variance_kind
                             ? w_var
                             : idw_weights_from_squared(d2, idw.kind);
    t.surrogate = w.coincident ? samples_.F(*w.coincident) : w.v.dot(samples_.F);
  }
  t.variance = variance_from_weights(w_var, samples_.F, t.surrogate);
  t.distance = params_.distance_kind == params_.variance_kind
                   ? distance_from_weights(w_var)
                   : distance_from_weights(idw_weights_from_squared(d2, params_.distance_kind));
  t.value = t.surrogate - params_.alpha * t.variance - params_.delta * delta_f_ * t.distance;
  return t;
}

}  // namespace glis
