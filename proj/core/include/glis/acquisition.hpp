#pragma once

#include "glis/problem.hpp"
#include "glis/surrogate.hpp"

namespace glis {

/// Exploration weights and penalty settings of the acquisition function
///   a(x) = fhat(x) - alpha * s(x) - delta * dF * z(x).
struct AcquisitionParams {
  double alpha = 1.0;
  double delta = 0.5;
  /// Floor on the observed range dF = max(max F - min F, eps_delta_f).
  double eps_delta_f = 1e-6;
  /// Weights used by the distance term z(x).
  IdwWeightKind distance_kind = IdwWeightKind::kInverseSquared;
  /// Weights used by the variance term s(x).
  IdwWeightKind variance_kind = IdwWeightKind::kInverseSquared;
  double penalty_rho = 1000.0;

  void validate() const;
};

/// s(x) = sqrt(sum_i v_i(x) (f_i - fhat(x))^2).
double idw_variance(const SampleSet& samples, double surrogate_value, const Vector& x,
                    IdwWeightKind kind);

/// z(x) = 0 on samples, (2/pi) atan(1 / sum_i w_i(x)) elsewhere.
double idw_distance(const SampleSet& samples, const Vector& x, IdwWeightKind kind);

double observed_range(const Vector& F, double eps_delta_f);

double acquisition(const Surrogate& surrogate, const SampleSet& samples, const Vector& x,
                   const AcquisitionParams& params);

/// rho * dF * sum_i max(g_i, 0)^2.
double constraint_penalty(const Vector& g, double rho, double delta_f);

/// a(x) plus the quadratic penalty on constraint_values(x) <= 0.
double penalized_acquisition(const Surrogate& surrogate, const SampleSet& samples,
                             const Vector& x, const AcquisitionParams& params,
                             const ConstraintFn& constraints);

/// Evaluates a(x) and its ingredients with a single distance sweep over the
/// samples. Holds references: the surrogate must outlive it.
class AcquisitionFunction {
 public:
  struct Terms {
    double surrogate = 0.0;
    double variance = 0.0;
    double distance = 0.0;
    double value = 0.0;
  };

  AcquisitionFunction(const Surrogate& surrogate, const AcquisitionParams& params);

  Terms terms(const Vector& x) const;
  double operator()(const Vector& x) const { return terms(x).value; }

  double delta_f() const { return delta_f_; }
  const SampleSet& samples() const { return samples_; }

 private:
  const Surrogate& surrogate_;
  const SampleSet& samples_;
  AcquisitionParams params_;
  double delta_f_;
};

}  // namespace glis
