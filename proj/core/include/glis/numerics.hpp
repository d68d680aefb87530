#pragma once

#include <Eigen/Core>

namespace glis {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Solves m * beta = rhs for a symmetric m, discarding every singular value
/// below `eps_svd`:  beta = V1 * inv(Sigma1) * U1' * rhs.
///
/// The decomposition is taken from the symmetric eigenproblem m = T L T'
/// (singular values are |L_ii|). If all singular values are truncated the
/// zero vector is returned.
Vector svd_truncated_solve(const Matrix& m, const Vector& rhs, double eps_svd);

/// Cholesky solve of m * X = rhs. Throws kNotPositiveDefinite on a
/// non-positive pivot.
Matrix spd_solve(const Matrix& m, const Matrix& rhs);

enum class LpSense { kMinimize, kMaximize };

/// Dense LP:  opt cost'x  s.t.  ineq_lhs * x <= ineq_rhs,  lower <= x <= upper.
/// Bounds may be +-infinity.
struct LpProblem {
  Vector cost;
  Matrix ineq_lhs;
  Vector ineq_rhs;
  Vector lower;
  Vector upper;
  LpSense sense = LpSense::kMinimize;

  /// Box-only problem of dimension n with free variables and no rows.
  static LpProblem free(Eigen::Index n, LpSense sense = LpSense::kMinimize);
};

struct LpSolution {
  Vector optimizer;
  double value = 0.0;
};

/// Two-phase dense simplex with Bland's rule. Throws kInfeasible or kUnbounded.
LpSolution solve_lp(const LpProblem& p);

bool all_finite(const Matrix& m);

}  // namespace glis
