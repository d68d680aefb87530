// Dense two-phase primal simplex with Bland's anti-cycling rule.
//
// The problem is brought to standard form  min c'y, T y = r, y >= 0, r >= 0
// by shifting/reflecting bounded variables, splitting free ones, adding one
// slack per inequality row and an artificial for every row whose right-hand
// side had to be negated.

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "glis/error.hpp"
#include "glis/numerics.hpp"

namespace glis {
namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kCostTol = 1e-10;
constexpr double kPhaseOneTol = 1e-9;
constexpr int kMaxPivots = 100000;

// Original variable j equals offset + sign * y[col] (- y[col2] when split).
struct VariableMap {
  double offset = 0.0;
  double sign = 1.0;
  Eigen::Index col = -1;
  Eigen::Index split_col = -1;
};

class Tableau {
 public:
  Tableau(Eigen::Index rows, Eigen::Index cols)
      : t_(Matrix::Zero(rows + 1, cols + 1)), basis_(static_cast<std::size_t>(rows), -1) {}

  Eigen::Index rows() const { return t_.rows() - 1; }
  Eigen::Index cols() const { return t_.cols() - 1; }
  double& at(Eigen::Index r, Eigen::Index c) { return t_(r, c); }
  double rhs(Eigen::Index r) const { return t_(r, cols()); }
  double& rhs(Eigen::Index r) { return t_(r, cols()); }
  Eigen::Index& basic(Eigen::Index r) { return basis_[static_cast<std::size_t>(r)]; }
  Eigen::Index basic(Eigen::Index r) const { return basis_[static_cast<std::size_t>(r)]; }

  void pivot(Eigen::Index r, Eigen::Index e) {
    t_.row(r) /= t_(r, e);
    for (Eigen::Index i = 0; i < t_.rows(); ++i) {
      if (i == r) continue;
      const double factor = t_(i, e);
      if (factor != 0.0) t_.row(i) -= factor * t_.row(r);
    }
    basic(r) = e;
  }

  // Minimizes cost'y over the columns flagged in `allowed`. Returns false when
  // the problem is unbounded.
  bool optimize(const Vector& cost, const std::vector<bool>& allowed) {
    const Eigen::Index m = rows();
    const Eigen::Index n = cols();
    t_.row(m).setZero();
    t_.row(m).head(n) = cost.transpose();
    for (Eigen::Index i = 0; i < m; ++i) {
      const double cb = cost(basic(i));
      if (cb != 0.0) t_.row(m) -= cb * t_.row(i);
    }

    for (int iter = 0; iter < kMaxPivots; ++iter) {
      Eigen::Index entering = -1;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (allowed[static_cast<std::size_t>(j)] && t_(m, j) < -kCostTol) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return true;

      Eigen::Index leaving = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < m; ++i) {
        const double a = t_(i, entering);
        if (a <= kPivotTol) continue;
        const double ratio = t_(i, n) / a;
        const double slack = 1e-12 * std::max(1.0, std::abs(ratio));
        if (leaving < 0 || ratio < best_ratio - slack) {
          best_ratio = ratio;
          leaving = i;
        } else if (ratio <= best_ratio + slack && basic(i) < basic(leaving)) {
          leaving = i;
        }
      }
      if (leaving < 0) return false;
      pivot(leaving, entering);
    }
    throw Error(ErrorKind::kInvalidArgument, "solve_lp: pivot limit exceeded");
  }

  double objective() const { return -t_(rows(), cols()); }

 private:
  Matrix t_;
  std::vector<Eigen::Index> basis_;
};

void validate(const LpProblem& p) {
  const Eigen::Index n = p.cost.size();
  if (p.ineq_lhs.cols() != n || p.ineq_lhs.rows() != p.ineq_rhs.size() || p.lower.size() != n ||
      p.upper.size() != n) {
    throw Error(ErrorKind::kDimensionMismatch, "solve_lp: inconsistent dimensions");
  }
  if (!p.cost.allFinite() || !p.ineq_lhs.allFinite() || !p.ineq_rhs.allFinite()) {
    throw Error(ErrorKind::kNonFinite, "solve_lp: non-finite cost or constraint data");
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    if (std::isnan(p.lower(j)) || std::isnan(p.upper(j)) || p.lower(j) == INFINITY ||
        p.upper(j) == -INFINITY) {
      throw Error(ErrorKind::kInvalidArgument, "solve_lp: invalid bound on variable " +
                                                   std::to_string(j));
    }
    if (p.lower(j) > p.upper(j)) {
      throw Error(ErrorKind::kInfeasible, "solve_lp: lower > upper on variable " +
                                              std::to_string(j));
    }
  }
}

}  // namespace

LpSolution solve_lp(const LpProblem& p) {
  validate(p);
  const Eigen::Index n = p.cost.size();
  const double sense = p.sense == LpSense::kMaximize ? -1.0 : 1.0;

  // Map each original variable onto nonnegative standard-form columns.
  std::vector<VariableMap> vars(static_cast<std::size_t>(n));
  Eigen::Index ny = 0;
  std::vector<std::pair<Eigen::Index, double>> range_rows;  // (column, width)
  for (Eigen::Index j = 0; j < n; ++j) {
    auto& v = vars[static_cast<std::size_t>(j)];
    const bool lo = std::isfinite(p.lower(j));
    const bool hi = std::isfinite(p.upper(j));
    v.col = ny++;
    if (lo) {
      v.offset = p.lower(j);
      if (hi) range_rows.emplace_back(v.col, p.upper(j) - p.lower(j));
    } else if (hi) {
      v.offset = p.upper(j);
      v.sign = -1.0;
    } else {
      v.split_col = ny++;
    }
  }

  // Inequality rows in y:  G y <= h.
  const Eigen::Index m_ineq = p.ineq_lhs.rows();
  const Eigen::Index m = m_ineq + static_cast<Eigen::Index>(range_rows.size());
  Matrix g = Matrix::Zero(m, ny);
  Vector h(m);
  Vector offsets(n);
  for (Eigen::Index j = 0; j < n; ++j) offsets(j) = vars[static_cast<std::size_t>(j)].offset;
  for (Eigen::Index i = 0; i < m_ineq; ++i) {
    h(i) = p.ineq_rhs(i) - p.ineq_lhs.row(i).dot(offsets);
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& v = vars[static_cast<std::size_t>(j)];
      g(i, v.col) += v.sign * p.ineq_lhs(i, j);
      if (v.split_col >= 0) g(i, v.split_col) -= p.ineq_lhs(i, j);
    }
  }
  for (std::size_t k = 0; k < range_rows.size(); ++k) {
    const Eigen::Index i = m_ineq + static_cast<Eigen::Index>(k);
    g(i, range_rows[k].first) = 1.0;
    h(i) = range_rows[k].second;
  }

  Vector cy = Vector::Zero(ny);
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto& v = vars[static_cast<std::size_t>(j)];
    const double c = sense * p.cost(j);
    cy(v.col) += v.sign * c;
    if (v.split_col >= 0) cy(v.split_col) -= c;
  }

  // Columns: [y | slacks | artificials].
  Eigen::Index n_art = 0;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (h(i) < 0.0) ++n_art;
  }
  const Eigen::Index n_cols = ny + m + n_art;
  Tableau tab(m, n_cols);
  Eigen::Index art = ny + m;
  for (Eigen::Index i = 0; i < m; ++i) {
    const double s = h(i) < 0.0 ? -1.0 : 1.0;
    for (Eigen::Index j = 0; j < ny; ++j) tab.at(i, j) = s * g(i, j);
    tab.at(i, ny + i) = s;
    tab.rhs(i) = s * h(i);
    if (s < 0.0) {
      tab.at(i, art) = 1.0;
      tab.basic(i) = art++;
    } else {
      tab.basic(i) = ny + i;
    }
  }

  std::vector<bool> allowed(static_cast<std::size_t>(n_cols), true);
  if (n_art > 0) {
    Vector phase_one = Vector::Zero(n_cols);
    phase_one.tail(n_art).setOnes();
    tab.optimize(phase_one, allowed);
    if (tab.objective() > kPhaseOneTol * std::max(1.0, h.cwiseAbs().maxCoeff())) {
      throw Error(ErrorKind::kInfeasible, "solve_lp: no feasible point");
    }
    // Drive zero-level artificials out of the basis where possible.
    for (Eigen::Index i = 0; i < m; ++i) {
      if (tab.basic(i) < ny + m) continue;
      for (Eigen::Index j = 0; j < ny + m; ++j) {
        if (std::abs(tab.at(i, j)) > 1e-9) {
          tab.pivot(i, j);
          break;
        }
      }
    }
    for (Eigen::Index j = ny + m; j < n_cols; ++j) allowed[static_cast<std::size_t>(j)] = false;
  }

  Vector phase_two = Vector::Zero(n_cols);
  phase_two.head(ny) = cy;
  if (!tab.optimize(phase_two, allowed)) {
    throw Error(ErrorKind::kUnbounded, "solve_lp: objective unbounded");
  }

  Vector y = Vector::Zero(n_cols);
  for (Eigen::Index i = 0; i < m; ++i) y(tab.basic(i)) = std::max(0.0, tab.rhs(i));

  LpSolution sol;
  sol.optimizer.resize(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto& v = vars[static_cast<std::size_t>(j)];
    double x = v.offset + v.sign * y(v.col);
    if (v.split_col >= 0) x -= y(v.split_col);
    // Snap onto the box so bound residuals are exactly zero.
    sol.optimizer(j) = std::min(std::max(x, p.lower(j)), p.upper(j));
  }
  sol.value = p.cost.dot(sol.optimizer);
  return sol;
}

}  // namespace glis
