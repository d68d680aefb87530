#include "glis/admm_qp.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <limits>
#include <string>

#include "glis/error.hpp"
#include "glis/random.hpp"

namespace glis {

void QpProblem::validate() const {
  const Eigen::Index n = Q.rows();
  const Eigen::Index q = A.rows();
  const Eigen::Index p = F.cols();
  if (Q.cols() != n || c.size() != n || F.rows() != n || A.cols() != n || b.size() != q ||
      S.rows() != q || S.cols() != p) {
    throw Error(ErrorKind::kDimensionMismatch, "QpProblem: inconsistent matrix shapes");
  }
  if ((Q - Q.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, Q.cwiseAbs().maxCoeff())) {
    throw Error(ErrorKind::kInvalidArgument, "QpProblem: Q is not symmetric");
  }
}

double QpProblem::objective(const Vector& z, const Vector& theta) const {
  return 0.5 * z.dot(Q * z) + linear_term(theta).dot(z);
}

QpProblem appendix_qp() {
  QpProblem qp;
  qp.Q.resize(5, 5);
  qp.Q << 6.6067, -1.6361, 2.8198, 0.3776, 3.1448,  //
      -1.6361, 0.9943, -0.9998, -0.4786, -0.5198,   //
      2.8198, -0.9998, 4.0749, 0.2183, 0.2714,      //
      0.3776, -0.4786, 0.2183, 0.7310, 0.1689,      //
      3.1448, -0.5198, 0.2714, 0.1689, 2.1716;
  qp.c.resize(5);
  qp.c << -11.4795, 1.0487, 7.2225, 25.8549, -6.6689;
  qp.A.resize(10, 5);
  qp.A << -0.8637, -1.0891, -0.6156, 1.4193, -1.0000,  //
      0.0774, 0.0326, 0.7481, 0.2916, -1.0000,        //
      -1.2141, 0.5525, -0.1924, 0.1978, -1.0000,      //
      -1.1135, 1.1006, 0.8886, 1.5877, -1.0000,       //
      -0.0068, 1.5442, -0.7648, -0.8045, -1.0000,     //
      1.5326, 0.0859, -1.4023, 0.6966, -1.0000,       //
      -0.7697, -1.4916, -1.4224, 0.8351, -1.0000,     //
      0.3714, -0.7423, 0.4882, -0.2437, -1.0000,      //
      -0.2256, -1.0616, -0.1774, 0.2157, -1.0000,     //
      1.1174, 2.3505, -0.1961, -1.1658, -1.0000;
  qp.b.resize(10);
  qp.b << 0.0838, 0.2290, 0.9133, 0.1524, 0.8258, 0.5383, 0.9961, 0.0782, 0.4427, 0.1067;
  qp.F.resize(5, 3);
  qp.F << 1.8733, 8.4038, -6.0033,  //
      -0.8249, -8.8803, 4.8997,     //
      -19.3302, 1.0009, 7.3936,     //
      -4.3897, -5.4453, 17.1189,    //
      -17.9468, 3.0352, -1.9412;
  qp.S.resize(10, 3);
  qp.S << 2.9080, -0.3538, 0.0229,  //
      0.8252, -0.8236, -0.2620,     //
      1.3790, -1.5771, -1.7502,     //
      -1.0582, 0.5080, -0.2857,     //
      -0.4686, 0.2820, -0.8314,     //
      -0.2725, 0.0335, -0.9792,     //
      1.0984, -1.3337, -1.1564,     //
      -0.2779, 1.1275, -0.5336,     //
      0.7015, 0.3502, -2.0026,      //
      -2.0518, -0.2991, 0.9642;
  return qp;
}

void AdmmConfig::validate() const {
  if (!(rho_bar > 0.0)) throw Error(ErrorKind::kInvalidArgument, "admm: rho_bar must be > 0");
  if (iterations < 1) throw Error(ErrorKind::kInvalidArgument, "admm: iterations must be >= 1");
  if (!std::isfinite(alpha_bar)) throw Error(ErrorKind::kNonFinite, "admm: alpha_bar not finite");
}

AdmmSolver::AdmmSolver(const QpProblem& qp, const AdmmConfig& config)
    : qp_(&qp), config_(config) {
  qp.validate();
  config.validate();
  const Matrix k = qp.Q / config.rho_bar + qp.A.transpose() * qp.A;
  const Eigen::Index n = qp.num_vars();
  Matrix rhs(n, qp.A.rows() + 1 + qp.F.cols());
  rhs << qp.A.transpose(), qp.c, qp.F;
  const Matrix solved = spd_solve(k, rhs);
  m_a_ = solved.leftCols(qp.A.rows());
  // The z-update of scaled ADMM is (Q + rho A'A) z = rho A'(s - u) - (c + F theta);
  // dividing by rho leaves (c + F theta) / rho on the right.
  k_c_ = solved.col(qp.A.rows()) / config.rho_bar;
  k_f_ = solved.rightCols(qp.F.cols()) / config.rho_bar;
}

QpSolution AdmmSolver::solve(const Vector& theta, const Observer& observer) const {
  const QpProblem& qp = *qp_;
  if (theta.size() != qp.num_params()) {
    throw Error(ErrorKind::kDimensionMismatch, "admm: theta has wrong dimension");
  }
  const Vector m_theta = k_c_ + k_f_ * theta;
  const Vector b_theta = qp.rhs(theta);
  const double alpha = config_.alpha_bar;

  Vector s = Vector::Zero(qp.num_constraints());
  Vector u = Vector::Zero(qp.num_constraints());
  Vector z(qp.num_vars());
  Vector w(qp.num_constraints());
  for (int i = 0; i < config_.iterations; ++i) {
    z.noalias() = m_a_ * (s - u);
    z -= m_theta;
    w.noalias() = alpha * (qp.A * z);
    w += (1.0 - alpha) * s;
    s = (w + u).cwiseMin(b_theta);
    u += w - s;
    if (observer) observer(i + 1, z, s, u);
  }
  return {z, qp.objective(z, theta)};
}

QpSolution admm_qp_solve(const QpProblem& qp, const Vector& theta, const AdmmConfig& config) {
  return AdmmSolver(qp, config).solve(theta);
}

namespace {

// Calls visit(indices) for every subset of {0..q-1} with `size` elements in
// lexicographic order; stops early when visit returns true.
template <typename Visit>
bool for_each_subset(int q, int size, std::vector<int>& current, int start, Visit&& visit) {
  if (static_cast<int>(current.size()) == size) return visit(current);
  for (int i = start; i <= q - (size - static_cast<int>(current.size())); ++i) {
    current.push_back(i);
    if (for_each_subset(q, size, current, i + 1, visit)) return true;
    current.pop_back();
  }
  return false;
}

}  // namespace

QpKktSolution qp_reference_solve_kkt(const QpProblem& qp, const Vector& theta) {
  qp.validate();
  const Eigen::Index n = qp.num_vars();
  const Eigen::Index q = qp.num_constraints();
  if (n > 12 || q > 16) {
    throw Error(ErrorKind::kEnumerationBoundExceeded,
                "qp_reference_solve: n=" + std::to_string(n) + ", q=" + std::to_string(q));
  }
  if (theta.size() != qp.num_params()) {
    throw Error(ErrorKind::kDimensionMismatch, "qp_reference_solve: theta has wrong dimension");
  }
  Eigen::LLT<Matrix> q_llt(qp.Q);
  if (q_llt.info() != Eigen::Success) {
    throw Error(ErrorKind::kNotPositiveDefinite, "qp_reference_solve: Q is not positive definite");
  }

  const Vector lin = qp.linear_term(theta);
  const Vector b_theta = qp.rhs(theta);
  const Vector z_free = -q_llt.solve(lin);
  const Matrix q_inv_at = q_llt.solve(qp.A.transpose());  // n x q
  const Matrix gram = qp.A * q_inv_at;                     // A Q^-1 A'
  const Vector slack_free = qp.A * z_free - b_theta;

  const double feas_tol = 1e-9;
  QpKktSolution out;
  bool found = false;
  auto try_set = [&](const std::vector<int>& active) {
    const auto k = static_cast<Eigen::Index>(active.size());
    Vector lambda = Vector::Zero(k);
    Vector z = z_free;
    if (k > 0) {
      Matrix h(k, k);
      Vector r(k);
      for (Eigen::Index i = 0; i < k; ++i) {
        r(i) = slack_free(active[static_cast<std::size_t>(i)]);
        for (Eigen::Index j = 0; j < k; ++j) {
          h(i, j) = gram(active[static_cast<std::size_t>(i)], active[static_cast<std::size_t>(j)]);
        }
      }
      Eigen::LDLT<Matrix> ldlt(h);
      if (ldlt.info() != Eigen::Success) return false;
      const Vector d = ldlt.vectorD();
      if (d.minCoeff() <= 1e-12 * std::max(1.0, d.maxCoeff())) return false;  // dependent rows
      lambda = ldlt.solve(r);
      if (!lambda.allFinite()) return false;
      for (Eigen::Index i = 0; i < k; ++i) {
        z -= q_inv_at.col(active[static_cast<std::size_t>(i)]) * lambda(i);
      }
    }
    if (k > 0 && lambda.minCoeff() < -1e-10 * std::max(1.0, lambda.cwiseAbs().maxCoeff())) {
      return false;
    }
    const Vector residual = qp.A * z - b_theta;
    for (Eigen::Index i = 0; i < q; ++i) {
      if (residual(i) > feas_tol * (1.0 + std::abs(b_theta(i)))) return false;
    }
    out.solution = {z, qp.objective(z, theta)};
    out.multipliers = Vector::Zero(q);
    for (Eigen::Index i = 0; i < k; ++i) {
      out.multipliers(active[static_cast<std::size_t>(i)]) = std::max(0.0, lambda(i));
    }
    found = true;
    return true;
  };

  std::vector<int> current;
  const int max_size = static_cast<int>(std::min(n, q));
  for (int size = 0; size <= max_size && !found; ++size) {
    current.clear();
    for_each_subset(static_cast<int>(q), size, current, 0, try_set);
  }
  if (!found) throw Error(ErrorKind::kInfeasible, "qp_reference_solve: no KKT point found");
  return out;
}

QpSolution qp_reference_solve(const QpProblem& qp, const Vector& theta) {
  return qp_reference_solve_kkt(qp, theta).solution;
}

double admm_performance(const QpProblem& qp, const std::vector<Vector>& thetas,
                        const std::vector<QpSolution>& references, const QpSolver& solver,
                        double beta_bar) {
  if (thetas.empty()) throw Error(ErrorKind::kInvalidArgument, "admm_performance: no thetas");
  if (references.size() != thetas.size()) {
    throw Error(ErrorKind::kDimensionMismatch, "admm_performance: one reference per theta");
  }
  double total = 0.0;
  for (std::size_t j = 0; j < thetas.size(); ++j) {
    const QpSolution sol = solver(thetas[j]);
    const double phi_ref = references[j].objective;
    const double optimality = std::max((sol.objective - phi_ref) / (1.0 + std::abs(phi_ref)), 0.0);
    const Vector b_theta = qp.rhs(thetas[j]);
    const Vector residual = qp.A * sol.z - b_theta;
    double violation = -std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < residual.size(); ++i) {
      violation = std::max(violation, residual(i) / (1.0 + std::abs(b_theta(i))));
    }
    double term = optimality + beta_bar * std::max(violation, 0.0);
    if (std::isnan(term)) term = kPerformanceCeiling;
    total += term;
  }
  double bracket = total / static_cast<double>(thetas.size());
  bracket = std::min(std::max(bracket, kPerformanceFloor), kPerformanceCeiling);
  return std::log(bracket);
}

double admm_performance(double rho_bar, double alpha_bar, const QpProblem& qp,
                        const std::vector<Vector>& thetas, double beta_bar, int iterations) {
  std::vector<QpSolution> refs;
  refs.reserve(thetas.size());
  for (const auto& t : thetas) refs.push_back(qp_reference_solve(qp, t));
  const AdmmSolver admm(qp, {rho_bar, alpha_bar, iterations});
  return admm_performance(qp, thetas, refs, [&](const Vector& t) { return admm.solve(t); },
                          beta_bar);
}

std::vector<Vector> sample_thetas(Eigen::Index p, int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vector> out(static_cast<std::size_t>(count), Vector(p));
  for (auto& t : out) {
    for (Eigen::Index i = 0; i < p; ++i) t(i) = rng.uniform(-1.0, 1.0);
  }
  return out;
}

AdmmStudy::AdmmStudy(QpProblem qp, Options options)
    : qp_(std::move(qp)), options_(options) {
  qp_.validate();
  if (options_.n_theta < 1) throw Error(ErrorKind::kInvalidArgument, "AdmmStudy: n_theta >= 1");
  thetas_ = sample_thetas(qp_.num_params(), options_.n_theta, options_.seed);
  references_.reserve(thetas_.size());
  for (const auto& t : thetas_) references_.push_back(qp_reference_solve(qp_, t));
}

double AdmmStudy::performance(double rho_bar, double alpha_bar) const {
  const AdmmSolver admm(qp_, {rho_bar, alpha_bar, options_.admm_iterations});
  return performance([&](const Vector& t) { return admm.solve(t); });
}

double AdmmStudy::performance(const QpSolver& solver) const {
  return admm_performance(qp_, thetas_, references_, solver, options_.beta_bar);
}

}  // namespace glis
