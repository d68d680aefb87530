#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "glis/acquisition.hpp"
#include "glis/benchmark_problems.hpp"
#include "glis/error.hpp"
#include "glis/sampling.hpp"
#include "oracles.hpp"

using glis::Matrix;
using glis::ProblemSpec;
using glis::Vector;

namespace {

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

ProblemSpec box(Vector lo, Vector hi) {
  ProblemSpec s;
  s.lower = std::move(lo);
  s.upper = std::move(hi);
  return s;
}

void expect_one_per_bin(const Matrix& x, const Vector& lo, const Vector& hi) {
  const Eigen::Index count = x.rows();
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    std::vector<int> hits(static_cast<std::size_t>(count), 0);
    for (Eigen::Index i = 0; i < count; ++i) {
      const double t = (x(i, j) - lo(j)) / (hi(j) - lo(j)) * static_cast<double>(count);
      const auto bin = std::min<Eigen::Index>(count - 1, static_cast<Eigen::Index>(std::floor(t)));
      ASSERT_GE(bin, 0);
      ++hits[static_cast<std::size_t>(bin)];
    }
    for (int h : hits) EXPECT_EQ(h, 1) << "coordinate " << j;
  }
}

}  // namespace

TEST(LatinHypercube, OnePointPerBin) {
  const Matrix x = glis::latin_hypercube(1, 4, vec({0}), vec({4}), 1);
  expect_one_per_bin(x, vec({0}), vec({4}));
  const Vector lo = vec({-1, 0, 10});
  const Vector hi = vec({1, 5, 20});
  expect_one_per_bin(glis::latin_hypercube(3, 50, lo, hi, 77), lo, hi);
}

TEST(LatinHypercube, SinglePointInsideBox) {
  const Matrix x = glis::latin_hypercube(2, 1, vec({-1, -1}), vec({1, 1}), 3);
  ASSERT_EQ(x.rows(), 1);
  EXPECT_TRUE((x.array().abs() <= 1.0).all());
}

TEST(LatinHypercube, SeedDeterminism) {
  const Matrix a = glis::latin_hypercube(4, 20, Vector::Zero(4), Vector::Ones(4), 42);
  const Matrix b = glis::latin_hypercube(4, 20, Vector::Zero(4), Vector::Ones(4), 42);
  const Matrix c = glis::latin_hypercube(4, 20, Vector::Zero(4), Vector::Ones(4), 43);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

TEST(ConstrainedLhs, NoConstraintsIsPlainLhs) {
  const ProblemSpec s = box(vec({0, 0}), vec({1, 1}));
  const Matrix x = glis::constrained_lhs(s, 6, 5);
  ASSERT_EQ(x.rows(), 6);
  expect_one_per_bin(x, s.lower, s.upper);
}

TEST(ConstrainedLhs, HalfspaceFilter) {
  ProblemSpec s = box(vec({-1, -1}), vec({1, 1}));
  s.lin_A = Matrix(1, 2);
  *s.lin_A << -1, 0;
  s.lin_b = vec({0});
  const Matrix x = glis::constrained_lhs(s, 10, 8);
  ASSERT_EQ(x.rows(), 10);
  EXPECT_TRUE((x.col(0).array() >= 0.0).all());
}

TEST(ConstrainedLhs, CamelDiskAndPolytope) {
  const auto p = glis::get_benchmark("camelsixhumps-constrained");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Matrix x = glis::constrained_lhs(p.spec, 4, seed);
    ASSERT_EQ(x.rows(), 4);
    for (Eigen::Index i = 0; i < 4; ++i) {
      const double d = x(i, 0) * x(i, 0) + (x(i, 1) + 0.1) * (x(i, 1) + 0.1);
      EXPECT_LE(d, 0.5);
      EXPECT_TRUE(p.spec.is_feasible(x.row(i).transpose(), 1e-9));
    }
  }
}

TEST(ConstrainedLhs, ErrorsOnThinOrEmptySets) {
  ProblemSpec flat = box(vec({-1, -1}), vec({1, 1}));
  flat.lin_A = Matrix(2, 2);
  *flat.lin_A << 1, 0, -1, 0;
  flat.lin_b = vec({0, 0});  // x1 == 0
  try {
    glis::constrained_lhs(flat, 3, 1);
    FAIL();
  } catch (const glis::Error& e) {
    EXPECT_EQ(e.kind(), glis::ErrorKind::kNotFullDimensional);
  }
  ProblemSpec tiny = box(vec({-1, -1}), vec({1, 1}));
  tiny.constraint_fn = [](const Vector& x) { return vec({x.squaredNorm() - 1e-12}); };
  try {
    glis::constrained_lhs(tiny, 3, 1);
    FAIL();
  } catch (const glis::Error& e) {
    EXPECT_EQ(e.kind(), glis::ErrorKind::kLowFeasibleVolume);
  }
}

TEST(ChebyshevRadius, Boxes) {
  EXPECT_NEAR(glis::chebyshev_radius(box(vec({-1, -1}), vec({1, 1}))), 1.0, 1e-12);
  EXPECT_NEAR(glis::chebyshev_radius(box(vec({0, 0}), vec({4, 2}))), 1.0, 1e-12);
}

TEST(ChebyshevRadius, HalfspaceAgainstGridOracle) {
  ProblemSpec s = box(vec({-2, -1}), vec({2, 1}));
  s.lin_A = Matrix(1, 2);
  *s.lin_A << 1, 1;
  s.lin_b = vec({0});
  const double r = glis::chebyshev_radius(s);
  const double grid = oracle::chebyshev_grid_2d(s.lower, s.upper, *s.lin_A, *s.lin_b, 1e-3);
  EXPECT_GE(r, grid - 1e-12);
  EXPECT_NEAR(r, grid, 2e-3);
}

TEST(ChebyshevRadius, MonotoneAndEmpty) {
  ProblemSpec s = box(vec({-2, -1}), vec({2, 1}));
  double previous = glis::chebyshev_radius(s);
  std::mt19937_64 gen(4);
  Matrix a(0, 2);
  Vector b(0);
  for (int k = 0; k < 6; ++k) {
    a.conservativeResize(k + 1, Eigen::NoChange);
    b.conservativeResize(k + 1);
    a.row(k) = oracle::random_vector(gen, 2, -1, 1).transpose();
    b(k) = std::uniform_real_distribution<>(0.1, 1.0)(gen);
    s.lin_A = a;
    s.lin_b = b;
    const double r = glis::chebyshev_radius(s);
    EXPECT_LE(r, previous + 1e-12);
    previous = r;
  }
  ProblemSpec empty = box(vec({-1}), vec({1}));
  empty.lin_A = Matrix::Ones(1, 1);
  empty.lin_b = vec({-5});
  try {
    glis::chebyshev_radius(empty);
    FAIL();
  } catch (const glis::Error& e) {
    EXPECT_EQ(e.kind(), glis::ErrorKind::kInfeasible);
  }
}

TEST(IdwFeasibleInit, SinglePoint) {
  const Matrix x = glis::idw_feasible_init(box(vec({0}), vec({1})), vec({0.3}), 1);
  ASSERT_EQ(x.rows(), 1);
  EXPECT_EQ(x(0, 0), 0.3);
}

TEST(IdwFeasibleInit, OneDimensionalSequenceMatchesGridArgmax) {
  const ProblemSpec s = box(vec({0}), vec({1}));
  const Matrix two = glis::idw_feasible_init(s, vec({0}), 2);
  glis::SampleSet one(Matrix::Zero(1, 1), Vector::Zero(1));
  const double expected = oracle::grid_argmin_1d(
      [&](double t) { return -glis::idw_distance(one, vec({t}), glis::IdwWeightKind::kInverseSquared); },
      0.0, 1.0, 100001);
  EXPECT_NEAR(two(1, 0), expected, 1e-3);
  EXPECT_NEAR(two(1, 0), 1.0, 1e-3);

  const Matrix three = glis::idw_feasible_init(s, vec({0.5}), 3);
  std::set<int> ends{static_cast<int>(std::lround(three(1, 0))), static_cast<int>(std::lround(three(2, 0)))};
  EXPECT_EQ(ends, (std::set<int>{0, 1}));
  EXPECT_NEAR(std::min(three(1, 0), three(2, 0)), 0.0, 1e-3);
  EXPECT_NEAR(std::max(three(1, 0), three(2, 0)), 1.0, 1e-3);
}

TEST(IdwFeasibleInit, ConstrainedPointsFeasibleAndDistinct) {
  const auto p = glis::get_benchmark("camelsixhumps-constrained");
  const Matrix x = glis::idw_feasible_init(p.spec, vec({0.5, 0.0}), 5);
  ASSERT_EQ(x.rows(), 5);
  for (Eigen::Index i = 0; i < 5; ++i) {
    EXPECT_TRUE(p.spec.is_feasible(x.row(i).transpose(), 1e-9));
    for (Eigen::Index k = 0; k < i; ++k) EXPECT_GT((x.row(i) - x.row(k)).norm(), 1e-6);
  }
}
