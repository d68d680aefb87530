#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "glis/numerics.hpp"

namespace glis {

/// Parametric QP  min_z 0.5 z'Qz + (c + F theta)'z  s.t.  A z <= b + S theta.
struct QpProblem {
  Matrix Q;
  Vector c;
  Matrix F;
  Matrix A;
  Vector b;
  Matrix S;

  Eigen::Index num_vars() const { return Q.rows(); }
  Eigen::Index num_constraints() const { return A.rows(); }
  Eigen::Index num_params() const { return F.cols(); }

  /// Shape and symmetry checks; positive definiteness surfaces at solve time.
  void validate() const;

  Vector linear_term(const Vector& theta) const { return c + F * theta; }
  Vector rhs(const Vector& theta) const { return b + S * theta; }
  double objective(const Vector& z, const Vector& theta) const;
};

/// The n=5, q=10, p=3 instance used for the hyperparameter study.
QpProblem appendix_qp();

struct AdmmConfig {
  double rho_bar = 1.0;
  /// Over-relaxation factor.
  double alpha_bar = 1.0;
  int iterations = 100;

  void validate() const;
};

struct QpSolution {
  Vector z;
  double objective = 0.0;
};

/// Fixed-iteration ADMM for the parametric QP. The matrix
/// K = (Q / rho_bar + A'A) is factored once at construction; the iteration is
///   z = K^{-1} A'(s - u) - K^{-1}(c + F theta) / rho_bar
///   w = alpha_bar A z + (1 - alpha_bar) s
///   s = min(w + u, b + S theta),  u += w - s.
class AdmmSolver {
 public:
  using Observer =
      std::function<void(int iteration, const Vector& z, const Vector& s, const Vector& u)>;

  /// Throws kNotPositiveDefinite, kInvalidArgument (bad config).
  AdmmSolver(const QpProblem& qp, const AdmmConfig& config);

  QpSolution solve(const Vector& theta, const Observer& observer = {}) const;

 private:
  const QpProblem* qp_;
  AdmmConfig config_;
  Matrix m_a_;  // (Q/rho + A'A)^{-1} A'
  Vector k_c_;  // (Q/rho + A'A)^{-1} c / rho
  Matrix k_f_;  // (Q/rho + A'A)^{-1} F / rho
};

QpSolution admm_qp_solve(const QpProblem& qp, const Vector& theta, const AdmmConfig& config);

/// Exact solution by enumerating candidate active sets (smallest first) and
/// accepting the first one whose KKT point is primal feasible with
/// nonnegative multipliers. Throws kEnumerationBoundExceeded when n > 12 or
/// q > 16, kInfeasible when no active set qualifies.
QpSolution qp_reference_solve(const QpProblem& qp, const Vector& theta);

/// Multipliers of the accepted active set (zero for inactive rows); exposed
/// for KKT checks.
struct QpKktSolution {
  QpSolution solution;
  Vector multipliers;
};
QpKktSolution qp_reference_solve_kkt(const QpProblem& qp, const Vector& theta);

/// Bracket floor applied before taking the logarithm of the performance index.
inline constexpr double kPerformanceFloor = 1e-300;
/// Bracket ceiling applied when a diverging solver produces non-finite values.
inline constexpr double kPerformanceCeiling = 1e300;

using QpSolver = std::function<QpSolution(const Vector& theta)>;

/// log( mean_j [ max((phi_j - phi*_j) / (1 + |phi*_j|), 0)
///          + beta_bar * max(max_i (A_i z_j - b_i - S_i theta_j) / (1 + |b_i + S_i theta_j|), 0) ] )
double admm_performance(const QpProblem& qp, const std::vector<Vector>& thetas,
                        const std::vector<QpSolution>& references, const QpSolver& solver,
                        double beta_bar = 1.0);

/// Same with the fixed-iteration ADMM at (rho_bar, alpha_bar) as the solver;
/// references are computed by qp_reference_solve.
double admm_performance(double rho_bar, double alpha_bar, const QpProblem& qp,
                        const std::vector<Vector>& thetas, double beta_bar = 1.0,
                        int iterations = 100);

/// count parameter vectors drawn uniformly from [-1, 1]^p.
std::vector<Vector> sample_thetas(Eigen::Index p, int count, std::uint64_t seed);

/// Hyperparameter study: a fixed theta sample with cached reference solutions.
class AdmmStudy {
 public:
  struct Options {
    int n_theta = 2000;
    std::uint64_t seed = 2020;
    int admm_iterations = 100;
    double beta_bar = 1.0;
  };

  explicit AdmmStudy(QpProblem qp) : AdmmStudy(std::move(qp), Options{}) {}
  AdmmStudy(QpProblem qp, Options options);

  double performance(double rho_bar, double alpha_bar) const;
  double performance(const QpSolver& solver) const;

  const QpProblem& qp() const { return qp_; }
  const std::vector<Vector>& thetas() const { return thetas_; }
  const std::vector<QpSolution>& references() const { return references_; }
  const Options& options() const { return options_; }

 private:
  QpProblem qp_;
  Options options_;
  std::vector<Vector> thetas_;
  std::vector<QpSolution> references_;
};

}  // namespace glis
