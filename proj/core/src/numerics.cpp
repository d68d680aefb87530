#include "glis/numerics.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <string>

#include "glis/error.hpp"

namespace glis {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kNonFinite: return "NonFinite";
    case ErrorKind::kNotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::kInfeasible: return "Infeasible";
    case ErrorKind::kUnbounded: return "Unbounded";
    case ErrorKind::kInfeasibleConstraints: return "InfeasibleConstraints";
    case ErrorKind::kDegenerateBox: return "DegenerateBox";
    case ErrorKind::kLowFeasibleVolume: return "LowFeasibleVolume";
    case ErrorKind::kNotFullDimensional: return "NotFullDimensional";
    case ErrorKind::kCoincidentPoint: return "CoincidentPoint";
    case ErrorKind::kDuplicatePoint: return "DuplicatePoint";
    case ErrorKind::kInvalidPhase: return "InvalidPhase";
    case ErrorKind::kUnknownBenchmark: return "UnknownBenchmark";
    case ErrorKind::kEnumerationBoundExceeded: return "EnumerationBoundExceeded";
  }
  return "Unknown";
}

bool all_finite(const Matrix& m) { return m.allFinite(); }

Vector svd_truncated_solve(const Matrix& m, const Vector& rhs, double eps_svd) {
  if (m.rows() != m.cols() || m.rows() != rhs.size()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "svd_truncated_solve: matrix " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + ", rhs " + std::to_string(rhs.size()));
  }
  if (!(eps_svd > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "svd_truncated_solve: eps_svd must be positive");
  }
  if (!m.allFinite() || !rhs.allFinite()) {
    throw Error(ErrorKind::kNonFinite, "svd_truncated_solve: non-finite input");
  }
  const Eigen::Index n = m.rows();
  if (n == 0) return Vector(0);

  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw Error(ErrorKind::kInvalidArgument, "svd_truncated_solve: matrix is not symmetric");
  }

  // For symmetric m the SVD is M = U S V' with S = |L|, V = T, U = T sign(L).
  Eigen::SelfAdjointEigenSolver<Matrix> eig(m);
  const Vector& lambda = eig.eigenvalues();
  const Matrix& t = eig.eigenvectors();

  Vector beta = Vector::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(lambda(i)) < eps_svd) continue;
    beta += t.col(i) * (t.col(i).dot(rhs) / lambda(i));
  }
  return beta;
}

Matrix spd_solve(const Matrix& m, const Matrix& rhs) {
  if (m.rows() != m.cols() || m.rows() != rhs.rows()) {
    throw Error(ErrorKind::kDimensionMismatch, "spd_solve: shape mismatch");
  }
  if (!m.allFinite() || !rhs.allFinite()) {
    throw Error(ErrorKind::kNonFinite, "spd_solve: non-finite input");
  }
  Eigen::LLT<Matrix> llt(m);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorKind::kNotPositiveDefinite, "spd_solve: non-positive pivot");
  }
  return llt.solve(rhs);
}

LpProblem LpProblem::free(Eigen::Index n, LpSense sense) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  LpProblem p;
  p.cost = Vector::Zero(n);
  p.ineq_lhs = Matrix(0, n);
  p.ineq_rhs = Vector(0);
  p.lower = Vector::Constant(n, -inf);
  p.upper = Vector::Constant(n, inf);
  p.sense = sense;
  return p;
}

}  // namespace glis
