#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "glis/admm_qp.hpp"
#include "glis/error.hpp"
#include "glis/numerics.hpp"
#include "oracles.hpp"

using glis::ErrorKind;
using glis::LpProblem;
using glis::LpSense;
using glis::Matrix;
using glis::Vector;

namespace {

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const glis::Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected glis::Error";
  return ErrorKind::kInvalidArgument;
}

Matrix random_symmetric(std::mt19937_64& gen, int n, double min_eig) {
  const Matrix r = Matrix::NullaryExpr(n, n, [&] { return std::normal_distribution<>(0, 1)(gen); });
  Eigen::HouseholderQR<Matrix> qr(r);
  const Matrix q = qr.householderQ();
  Vector d = oracle::random_vector(gen, n, min_eig, 10.0);
  for (int i = 0; i < n; i += 2) d(i) = -d(i);  // indefinite is fine
  return q * d.asDiagonal() * q.transpose();
}

}  // namespace

TEST(SvdTruncatedSolve, IdentityReturnsRhs) {
  const Vector x = glis::svd_truncated_solve(Matrix::Identity(3, 3), vec({1, 2, 3}), 1e-6);
  EXPECT_TRUE(x.isApprox(vec({1, 2, 3}), 1e-14));
}

TEST(SvdTruncatedSolve, SmallSingularValueIsDropped) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = 1e-9;
  const Vector x = glis::svd_truncated_solve(m, vec({1, 1}), 1e-6);
  EXPECT_NEAR(x(0), 1.0, 1e-14);
  EXPECT_EQ(x(1), 0.0);
}

TEST(SvdTruncatedSolve, MatchesDirectTwoByTwoInverse) {
  Matrix m(2, 2);
  m << 2, 1, 1, 2;
  const Vector rhs = vec({3, 3});
  const Vector expected = oracle::inverse_2x2(m) * rhs;
  const Vector x = glis::svd_truncated_solve(m, rhs, 1e-6);
  EXPECT_NEAR(x(0), expected(0), 1e-12);
  EXPECT_NEAR(x(1), expected(1), 1e-12);
  EXPECT_NEAR(x(0), 1.0, 1e-12);
}

TEST(SvdTruncatedSolve, AllTruncatedGivesZero) {
  const Vector x = glis::svd_truncated_solve(1e-9 * Matrix::Identity(3, 3), vec({1, 2, 3}), 1e-6);
  EXPECT_TRUE(x.isZero(0.0));
}

TEST(SvdTruncatedSolve, RejectsBadInput) {
  EXPECT_EQ(kind_of([] { glis::svd_truncated_solve(Matrix::Identity(3, 3), vec({1, 2}), 1e-6); }),
            ErrorKind::kDimensionMismatch);
  Matrix nan = Matrix::Identity(2, 2);
  nan(0, 1) = nan(1, 0) = NAN;
  EXPECT_EQ(kind_of([&] { glis::svd_truncated_solve(nan, vec({1, 2}), 1e-6); }),
            ErrorKind::kNonFinite);
  Matrix asym = Matrix::Identity(2, 2);
  asym(0, 1) = 1.0;
  EXPECT_EQ(kind_of([&] { glis::svd_truncated_solve(asym, vec({1, 2}), 1e-6); }),
            ErrorKind::kInvalidArgument);
  EXPECT_EQ(kind_of([] { glis::svd_truncated_solve(Matrix::Identity(2, 2), vec({1, 2}), 0.0); }),
            ErrorKind::kInvalidArgument);
}

TEST(SvdTruncatedSolve, ReproducesExactSolveWhenNothingTruncated) {
  std::mt19937_64 gen(11);
  for (int n : {1, 2, 5, 10, 25, 50}) {
    const Matrix m = random_symmetric(gen, n, 0.5);
    const Vector rhs = oracle::random_vector(gen, n, -1, 1);
    const Vector x = glis::svd_truncated_solve(m, rhs, 1e-12);
    EXPECT_LE((m * x - rhs).norm(), 1e-8 * rhs.norm()) << "n=" << n;
  }
}

TEST(SvdTruncatedSolve, InvariantUnderSymmetricPermutation) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 8;
    Matrix m = random_symmetric(gen, n, 1e-3);
    m(0, 0) = 0.0;  // make some truncation possible without changing symmetry
    const Vector rhs = oracle::random_vector(gen, n, -1, 1);
    Eigen::PermutationMatrix<Eigen::Dynamic> perm(n);
    perm.setIdentity();
    std::shuffle(perm.indices().data(), perm.indices().data() + n, gen);
    const Matrix pm = perm * m * perm.transpose();
    const Vector x = glis::svd_truncated_solve(m, rhs, 1e-2);
    const Vector px = glis::svd_truncated_solve(pm, perm * rhs, 1e-2);
    EXPECT_LE((perm * x - px).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(SpdSolve, Basics) {
  EXPECT_TRUE(glis::spd_solve(Matrix::Identity(2, 2), Matrix::Identity(2, 2))
                  .isApprox(Matrix::Identity(2, 2)));
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 4;
  d(1, 1) = 9;
  const Matrix x = glis::spd_solve(d, vec({8, 27}));
  EXPECT_NEAR(x(0, 0), 2.0, 1e-15);
  EXPECT_NEAR(x(1, 0), 3.0, 1e-15);
}

TEST(SpdSolve, ResidualOnCaseStudyMatrix) {
  const glis::QpProblem qp = glis::appendix_qp();
  const Matrix m = qp.Q + qp.A.transpose() * qp.A;
  const Matrix rhs = qp.A.transpose();
  const Matrix x = glis::spd_solve(m, rhs);
  EXPECT_LE((m * x - rhs).norm(), 1e-8);
}

TEST(SpdSolve, RejectsIndefinite) {
  Matrix m = Matrix::Identity(2, 2);
  m(1, 1) = -1.0;
  EXPECT_EQ(kind_of([&] { glis::spd_solve(m, vec({1, 1})); }), ErrorKind::kNotPositiveDefinite);
}

TEST(SolveLp, ChebyshevRadiusOfUnitBox) {
  // Variables (x1, x2, r): maximize r with -1 + r <= x <= 1 - r.
  LpProblem p = LpProblem::free(3, LpSense::kMaximize);
  p.cost = vec({0, 0, 1});
  p.ineq_lhs.resize(4, 3);
  p.ineq_lhs << -1, 0, 1, 1, 0, 1, 0, -1, 1, 0, 1, 1;
  p.ineq_rhs = vec({1, 1, 1, 1});
  p.lower(2) = 0.0;
  const auto sol = glis::solve_lp(p);
  EXPECT_NEAR(sol.value, 1.0, 1e-12);
}

TEST(SolveLp, BoxMinimum) {
  LpProblem p;
  p.cost = vec({1, 0});
  p.ineq_lhs.resize(0, 2);
  p.ineq_rhs.resize(0);
  p.lower = vec({-2, -2});
  p.upper = vec({3, 3});
  const auto sol = glis::solve_lp(p);
  EXPECT_EQ(sol.optimizer(0), -2.0);
  EXPECT_EQ(sol.value, -2.0);
}

TEST(SolveLp, HalfspaceBoundingBoxMatchesVertexEnumeration) {
  LpProblem p;
  p.cost = vec({1, 0});
  p.sense = LpSense::kMaximize;
  p.ineq_lhs.resize(1, 2);
  p.ineq_lhs << 1, 1;
  p.ineq_rhs = vec({0});
  p.lower = vec({-5, -5});
  p.upper = vec({5, 5});
  const auto sol = glis::solve_lp(p);
  const auto oracle_value = oracle::lp_vertex_enumeration(p);
  ASSERT_TRUE(oracle_value.has_value());
  EXPECT_NEAR(sol.value, *oracle_value, 1e-12);
  EXPECT_NEAR(sol.value, 5.0, 1e-12);
}

TEST(SolveLp, InfeasibleAndUnbounded) {
  LpProblem p;
  p.cost = vec({1});
  p.ineq_lhs.resize(2, 1);
  p.ineq_lhs << 1, -1;
  p.ineq_rhs = vec({-1, -1});  // x <= -1 and x >= 1
  p.lower = vec({-10});
  p.upper = vec({10});
  EXPECT_EQ(kind_of([&] { glis::solve_lp(p); }), ErrorKind::kInfeasible);

  LpProblem u = LpProblem::free(1);
  u.cost = vec({1});
  EXPECT_EQ(kind_of([&] { glis::solve_lp(u); }), ErrorKind::kUnbounded);
}

TEST(SolveLp, FreeAndOneSidedVariables) {
  // min x + y  s.t. x + y >= 1 (as -x - y <= -1), x free, y <= 4.
  LpProblem p = LpProblem::free(2);
  p.cost = vec({1, 2});
  p.ineq_lhs.resize(2, 2);
  p.ineq_lhs << -1, -1, 1, 0;
  p.ineq_rhs = vec({-1, 3});
  p.upper(1) = 4.0;
  const auto sol = glis::solve_lp(p);
  // Cheapest is x as large as allowed (3), y = -2.
  EXPECT_NEAR(sol.optimizer(0), 3.0, 1e-12);
  EXPECT_NEAR(sol.optimizer(1), -2.0, 1e-12);
  EXPECT_NEAR(sol.value, -1.0, 1e-12);
}

TEST(SolveLp, RandomLpsMatchVertexEnumeration) {
  std::mt19937_64 gen(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 4);
    const int m = 1 + static_cast<int>(gen() % 5);
    const LpProblem p = oracle::random_lp(gen, n, m);
    const auto sol = glis::solve_lp(p);
    const auto expected = oracle::lp_vertex_enumeration(p);
    ASSERT_TRUE(expected.has_value());
    EXPECT_NEAR(sol.value, *expected, 1e-8) << "trial " << trial;
    EXPECT_NEAR(sol.value, p.cost.dot(sol.optimizer), 1e-12);
    EXPECT_LE((p.ineq_lhs * sol.optimizer - p.ineq_rhs).maxCoeff(), 1e-9);
  }
}
