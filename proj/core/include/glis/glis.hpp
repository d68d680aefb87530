#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "glis/acquisition.hpp"
#include "glis/problem.hpp"
#include "glis/pso.hpp"
#include "glis/surrogate.hpp"

namespace glis {

/// Self-tuned (alpha, delta, epsilon) for the one-dimensional test function.
inline constexpr double kTunedAlpha = 0.8215;
inline constexpr double kTunedDelta = 2.6788;
inline constexpr double kTunedEpsilon = 1.3296;

enum class SurrogateType { kRbf, kIdw };

struct GlisConfig {
  AcquisitionParams acquisition{.alpha = kTunedAlpha, .delta = kTunedDelta};
  SurrogateType surrogate = SurrogateType::kRbf;
  RbfKind rbf{RbfKernel::kInverseQuadratic, kTunedEpsilon};
  /// Weights of the IDW surrogate (used when surrogate == kIdw).
  IdwWeightKind idw_kind = IdwWeightKind::kInverseSquared;
  double eps_svd = kDefaultEpsSvd;
  /// 0 selects 2 n.
  int n_init = 0;
  /// 0 selects 20 n.
  int n_max = 0;
  PsoConfig pso;
  std::uint64_t seed = 0;
  /// Divide alpha, delta and the RBF epsilon by the problem dimension.
  bool divide_hyperparams_by_n = true;

  /// Copy with n_init / n_max / the dimension scaling resolved for n.
  GlisConfig resolved(Eigen::Index n) const;
  void validate() const;
};

enum class GlisPhase { kInitializing, kRunning, kFinished };

/// Constraint violations at or below this are treated as feasible when
/// choosing the best sample.
inline constexpr double kFeasibilityTol = 1e-8;

/// Surrogate-based optimizer with an ask/tell interface.
///
/// Construction tightens the box against linear constraints, builds the
/// [-1, 1] scaling and draws the initial design. While initializing,
/// suggest() hands out the design points; once n_init observations are in,
/// the surrogate is fitted and suggest() minimizes the (penalized)
/// acquisition function with PSO. If the objective may not be evaluated
/// outside the feasible set, an infeasible minimizer is moved onto the
/// feasible set by bisection towards the best feasible sample. Surrogate, samples and acquisition all live
/// in scaled coordinates; suggest()/observe() speak original coordinates.
class Glis {
 public:
  Glis(ProblemSpec spec, const GlisConfig& config);

  /// Constructs the optimizer and evaluates spec.objective on the whole
  /// initial design.
  static Glis initialize(ProblemSpec spec, const GlisConfig& config);

  /// Next point to evaluate. Throws kInvalidPhase once finished.
  Vector suggest();

  /// Records f(x). Throws kDuplicatePoint if x was already observed and
  /// kInvalidPhase once finished.
  void observe(const Vector& x, double f);

  GlisPhase phase() const { return phase_; }
  Eigen::Index evaluations() const { return samples_.size(); }

  /// Samples in scaled coordinates.
  const SampleSet& samples() const { return samples_; }
  /// Observed points in original coordinates, one per row.
  const Matrix& points() const { return points_; }
  const std::vector<bool>& feasible() const { return feasible_; }

  /// Best feasible sample (any sample if none is feasible); -1 before the
  /// first observation.
  Eigen::Index best_index() const { return best_index_; }
  Vector best_x() const;
  double best_f() const;

  const std::optional<Surrogate>& surrogate() const { return surrogate_; }
  const ScalingMap& scaling() const { return scaling_; }
  const Vector& lower() const { return lower_; }
  const Vector& upper() const { return upper_; }
  const GlisConfig& config() const { return config_; }
  const ProblemSpec& spec() const { return spec_; }

  /// Initial design in original coordinates.
  const Matrix& initial_design() const { return design_; }

  /// Acquisition penalty terms in scaled coordinates: [A_bar x - b_bar; g(x(x_bar))].
  Vector scaled_constraints(const Vector& x_bar) const;

 private:
  void fit_surrogate();
  void update_best(Eigen::Index i);
  Vector resolve_duplicate(const Vector& candidate, const Matrix& swarm,
                           bool must_be_feasible) const;
  bool scaled_feasible(const Vector& x_bar) const;
  Vector restore_feasibility(const Vector& x_bar) const;

  ProblemSpec spec_;
  GlisConfig config_;
  Vector lower_;
  Vector upper_;
  ScalingMap scaling_;
  Matrix design_;
  SampleSet samples_;
  Matrix points_;
  std::vector<bool> feasible_;
  std::optional<Surrogate> surrogate_;
  std::optional<Vector> pending_;
  Eigen::Index best_index_ = -1;
  GlisPhase phase_ = GlisPhase::kInitializing;
};

struct GlisResult {
  Vector x_best;
  double f_best = 0.0;
  /// Best-so-far value after each evaluation (+inf until a feasible sample
  /// exists).
  std::vector<double> history;
  Matrix points;
  Vector values;
};

/// Runs the optimizer to n_max evaluations of spec.objective.
GlisResult glis_run(const ProblemSpec& spec, const GlisConfig& config);

}  // namespace glis
