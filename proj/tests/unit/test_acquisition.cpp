#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "glis/acquisition.hpp"
#include "glis/benchmark_problems.hpp"
#include "oracles.hpp"

using glis::AcquisitionParams;
using glis::IdwWeightKind;
using glis::Matrix;
using glis::RbfKernel;
using glis::SampleSet;
using glis::Vector;

namespace {

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

SampleSet f1d_samples(std::initializer_list<double> xs) {
  SampleSet s(1);
  for (double x : xs) s.append(vec({x}), glis::f_1d(x));
  return s;
}

constexpr auto kInv = IdwWeightKind::kInverseSquared;

}  // namespace

TEST(IdwVariance, ZeroAtSamplesAndSymmetricCase) {
  const SampleSet s = f1d_samples({-2.0, -0.5, 0.4, 1.1, 2.6});
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    EXPECT_EQ(glis::idw_variance(s, s.F(i), s.point(i), kInv), 0.0);
  }
  SampleSet two(Matrix(2, 1), vec({0, 2}));
  two.X << -1, 1;
  EXPECT_DOUBLE_EQ(glis::idw_variance(two, 1.0, vec({0}), kInv), 1.0);
}

TEST(IdwVariance, NonnegativeOnGrid) {
  const SampleSet s = f1d_samples({-2.0, -0.5, 0.4, 1.1, 2.6});
  const auto model = glis::IdwModel{kInv, s};
  for (int i = 0; i <= 600; ++i) {
    const Vector x = vec({-3.0 + 0.01 * i});
    EXPECT_GE(glis::idw_variance(s, model.predict(x), x, kInv), 0.0);
  }
}

TEST(IdwDistance, ClosedFormsAndRange) {
  const SampleSet s = f1d_samples({0.0});
  EXPECT_EQ(glis::idw_distance(s, vec({0.0}), kInv), 0.0);
  EXPECT_NEAR(glis::idw_distance(s, vec({1.0}), kInv), 0.5, 1e-15);

  SampleSet three(Matrix(3, 1), vec({0, 0, 0}));
  three.X << 1, 2, 3;
  // Local maxima strictly between consecutive samples; bounded by 1.
  auto z = [&](double t) { return glis::idw_distance(three, vec({t}), kInv); };
  for (double mid : {1.5, 2.5}) {
    EXPECT_GT(z(mid), z(mid - 0.2));
    EXPECT_GT(z(mid), z(mid + 0.2));
  }
  for (double far : {-1e3, 1e3, 1e8}) {
    EXPECT_LT(z(far), 1.0);
    EXPECT_GT(z(far), 0.99);
  }
}

TEST(Acquisition, PureExploitationAndConstantF) {
  const SampleSet s = f1d_samples({-2.0, -0.5, 0.4, 1.1, 2.6});
  const glis::Surrogate sur = glis::RbfModel::fit(s, {RbfKernel::kThinPlateSpline, 1.0});
  AcquisitionParams p;
  p.alpha = 0.0;
  p.delta = 0.0;
  for (double t : {-1.3, 0.0, 2.0}) {
    EXPECT_EQ(glis::acquisition(sur, s, vec({t}), p), glis::surrogate_predict(sur, vec({t})));
  }

  SampleSet flat(Matrix(3, 1), vec({7, 7, 7}));
  flat.X << 0, 1, 2;
  const glis::Surrogate fs = glis::IdwModel{kInv, flat};
  AcquisitionParams q;
  q.alpha = 0.7;
  q.delta = 0.3;
  const Vector x = vec({0.4});
  const double expected = glis::surrogate_predict(fs, x) -
                          q.alpha * glis::idw_variance(flat, glis::surrogate_predict(fs, x), x, kInv) -
                          q.delta * q.eps_delta_f * glis::idw_distance(flat, x, kInv);
  EXPECT_DOUBLE_EQ(glis::acquisition(fs, flat, x, q), expected);
  EXPECT_EQ(glis::observed_range(flat.F, q.eps_delta_f), q.eps_delta_f);
}

TEST(Acquisition, GridArgminLiesBetweenSamples) {
  const SampleSet s = f1d_samples({-2.0, -0.5, 0.4, 1.1, 2.6});
  const glis::Surrogate sur = glis::RbfModel::fit(s, {RbfKernel::kThinPlateSpline, 1.0}, 1e-6);
  const AcquisitionParams p;  // alpha = 1, delta = 1/2
  const double x_star = oracle::grid_argmin_1d(
      [&](double t) { return glis::acquisition(sur, s, vec({t}), p); }, -3.0, 3.0, 60001);
  for (Eigen::Index i = 0; i < s.size(); ++i) EXPECT_GT(std::abs(x_star - s.X(i, 0)), 1e-3);
}

TEST(Acquisition, TermsAgreeWithFreeFunctions) {
  std::mt19937_64 gen(12);
  SampleSet s(3);
  for (int i = 0; i < 9; ++i) {
    const Vector x = oracle::random_vector(gen, 3, -1, 1);
    s.append(x, x.squaredNorm());
  }
  const glis::Surrogate sur = glis::RbfModel::fit(s, {RbfKernel::kInverseQuadratic, 1.0});
  AcquisitionParams p;
  p.variance_kind = IdwWeightKind::kExpInverseSquared;
  const glis::AcquisitionFunction acq(sur, p);
  for (int k = 0; k < 20; ++k) {
    const Vector x = oracle::random_vector(gen, 3, -1, 1);
    EXPECT_NEAR(acq(x), glis::acquisition(sur, s, x, p), 1e-12);
  }
  EXPECT_NEAR(acq(s.point(0)), glis::acquisition(sur, s, s.point(0), p), 1e-12);
}

TEST(Acquisition, StrictlyDecreasingInAlphaAndDelta) {
  const SampleSet s = f1d_samples({-2.0, -0.5, 0.4, 1.1, 2.6});
  const glis::Surrogate sur = glis::RbfModel::fit(s, {RbfKernel::kInverseQuadratic, 1.0});
  const Vector x = vec({0.9});
  AcquisitionParams p;
  double prev = glis::acquisition(sur, s, x, p);
  for (double a : {1.5, 2.0, 4.0}) {
    p.alpha = a;
    const double v = glis::acquisition(sur, s, x, p);
    EXPECT_LT(v, prev);
    prev = v;
  }
  for (double d : {1.0, 2.0, 3.0}) {
    p.delta = d;
    const double v = glis::acquisition(sur, s, x, p);
    EXPECT_LT(v, prev);
    prev = v;
  }
}

TEST(PenalizedAcquisition, Examples) {
  SampleSet s(Matrix(2, 1), vec({0, 1}));
  s.X << 0, 3;
  const glis::Surrogate sur = glis::IdwModel{kInv, s};
  const AcquisitionParams p;
  auto g = [](const Vector& x) { return vec({x(0) - 1.0}); };
  const Vector feasible = vec({0.5});
  EXPECT_EQ(glis::penalized_acquisition(sur, s, feasible, p, g), glis::acquisition(sur, s, feasible, p));
  const Vector x = vec({2.0});
  // Delta F = 1 for these samples.
  EXPECT_NEAR(glis::penalized_acquisition(sur, s, x, p, g), glis::acquisition(sur, s, x, p) + 1000.0, 1e-9);
  EXPECT_DOUBLE_EQ(glis::constraint_penalty(vec({1.0, -3.0}), 1000.0, 1.0), 1000.0);
}

TEST(PenalizedAcquisition, CamelUnconstrainedMinimumIsPenalized) {
  const auto p = glis::get_benchmark("camelsixhumps-constrained");
  const Vector x = vec({-0.0898, 0.7126});
  const Vector g = p.spec.constraint_values(x);
  EXPECT_GT(g.maxCoeff(), 0.0);
  EXPECT_GT(glis::constraint_penalty(g, 1000.0, 1.0), 0.0);
}
