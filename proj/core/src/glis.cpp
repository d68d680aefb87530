#include "glis/glis.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "glis/error.hpp"
#include "glis/random.hpp"
#include "glis/sampling.hpp"

namespace glis {
namespace {

// Scaled-space distance below which a suggestion counts as a resample.
constexpr double kDuplicateRadius = 1e-10;
constexpr int kMaxFallbackDraws = 1000000;

double nearest_distance(const SampleSet& samples, const Vector& x) {
  if (samples.empty()) return std::numeric_limits<double>::infinity();
  return std::sqrt(samples.squared_distances(x).minCoeff());
}

}  // namespace

GlisConfig GlisConfig::resolved(Eigen::Index n) const {
  GlisConfig out = *this;
  const int dim = static_cast<int>(n);
  if (out.n_init <= 0) out.n_init = 2 * dim;
  if (out.n_max <= 0) out.n_max = 20 * dim;
  if (out.divide_hyperparams_by_n) {
    const double d = static_cast<double>(n);
    out.acquisition.alpha /= d;
    out.acquisition.delta /= d;
    out.rbf.epsilon /= d;
    out.divide_hyperparams_by_n = false;
  }
  return out;
}

void GlisConfig::validate() const {
  acquisition.validate();
  pso.validate();
  if (n_init < 0 || n_max < 0) {
    throw Error(ErrorKind::kInvalidArgument, "glis: n_init and n_max must be >= 1");
  }
  if (n_init > 0 && n_max > 0 && n_max < n_init) {
    throw Error(ErrorKind::kInvalidArgument, "glis: n_max must be >= n_init");
  }
  if (!(eps_svd > 0.0)) throw Error(ErrorKind::kInvalidArgument, "glis: eps_svd must be > 0");
  if (surrogate == SurrogateType::kRbf && !(rbf.epsilon > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "glis: RBF epsilon must be > 0");
  }
}

Glis::Glis(ProblemSpec spec, const GlisConfig& config) : spec_(std::move(spec)) {
  spec_.validate();
  config.validate();
  const Eigen::Index n = spec_.dim();
  config_ = config.resolved(n);
  config_.validate();

  std::tie(lower_, upper_) = tighten_bounds(spec_);
  scaling_ = ScalingMap::build(lower_, upper_, spec_.lin_A, spec_.lin_b);

  ProblemSpec boxed = spec_;
  boxed.lower = lower_;
  boxed.upper = upper_;
  const std::uint64_t design_seed = derive_seed(config_.seed, 0);
  if (!spec_.eval_outside_feasible && spec_.has_constraints()) {
    design_ = constrained_lhs(boxed, config_.n_init, design_seed);
  } else {
    design_ = latin_hypercube(n, config_.n_init, lower_, upper_, design_seed);
  }

  samples_ = SampleSet(n);
  points_ = Matrix(0, n);
  if (config_.n_max == 0) phase_ = GlisPhase::kFinished;
}

Glis Glis::initialize(ProblemSpec spec, const GlisConfig& config) {
  if (!spec.objective) {
    throw Error(ErrorKind::kInvalidArgument, "glis: initialize requires an objective callback");
  }
  Glis glis(std::move(spec), config);
  while (glis.phase_ == GlisPhase::kInitializing) {
    const Vector x = glis.suggest();
    glis.observe(x, glis.spec_.objective(x));
  }
  return glis;
}

Vector Glis::scaled_constraints(const Vector& x_bar) const {
  Vector lin;
  if (scaling_.scaled_A()) lin = (*scaling_.scaled_A()) * x_bar - *scaling_.scaled_b();
  Vector nonlin;
  if (spec_.constraint_fn) nonlin = spec_.constraint_fn(scaling_.to_original(x_bar));
  Vector out(lin.size() + nonlin.size());
  out << lin, nonlin;
  return out;
}

Vector Glis::suggest() {
  if (phase_ == GlisPhase::kFinished) {
    throw Error(ErrorKind::kInvalidPhase, "glis: suggest() after the evaluation budget is spent");
  }
  const Eigen::Index n = spec_.dim();
  if (phase_ == GlisPhase::kInitializing) {
    const Eigen::Index next = std::min<Eigen::Index>(samples_.size(), design_.rows() - 1);
    const Vector x = design_.row(next).transpose();
    pending_ = scaling_.to_scaled(x);
    return x;
  }

  const AcquisitionFunction acq(*surrogate_, config_.acquisition);
  const bool constrained = spec_.has_constraints();
  const double rho = config_.acquisition.penalty_rho;
  auto objective = [&](const Vector& x_bar) {
    double value = acq(x_bar);
    if (constrained) value += constraint_penalty(scaled_constraints(x_bar), rho, acq.delta_f());
    return value;
  };

  PsoConfig pso = config_.pso;
  pso.seed = derive_seed(config_.seed, 1 + static_cast<std::uint64_t>(samples_.size()));
  const PsoResult best = pso_minimize(objective, -Vector::Ones(n), Vector::Ones(n), pso);

  // When f may only be evaluated on the feasible set, pull the penalty
  // minimizer (which sits slightly outside) back onto it.
  const bool must_be_feasible = constrained && !spec_.eval_outside_feasible;
  Vector x_bar = must_be_feasible ? restore_feasibility(best.x) : best.x;
  if (nearest_distance(samples_, x_bar) <= kDuplicateRadius) {
    x_bar = resolve_duplicate(x_bar, best.swarm, must_be_feasible);
  }
  pending_ = x_bar;
  return scaling_.to_original(x_bar);
}

bool Glis::scaled_feasible(const Vector& x_bar) const {
  return spec_.max_violation(scaling_.to_original(x_bar)) <= 0.0;
}

Vector Glis::restore_feasibility(const Vector& x_bar) const {
  if (scaled_feasible(x_bar)) return x_bar;
  if (best_index_ < 0 || !feasible_[static_cast<std::size_t>(best_index_)]) return x_bar;
  // Bisect on the segment to the best feasible sample, keeping the feasible end.
  Vector inside = samples_.point(best_index_);
  if (!scaled_feasible(inside)) return x_bar;
  Vector outside = x_bar;
  for (int it = 0; it < 60 && (outside - inside).norm() > 1e-15; ++it) {
    const Vector mid = 0.5 * (inside + outside);
    (scaled_feasible(mid) ? inside : outside) = mid;
  }
  return inside;
}

Vector Glis::resolve_duplicate(const Vector& candidate, const Matrix& swarm,
                               bool must_be_feasible) const {
  const IdwWeightKind kind = config_.acquisition.distance_kind;
  double best_z = -1.0;
  Vector best = candidate;
  for (Eigen::Index p = 0; p < swarm.rows(); ++p) {
    Vector x = swarm.row(p).transpose();
    if (must_be_feasible) x = restore_feasibility(x);
    if (nearest_distance(samples_, x) <= kDuplicateRadius) continue;
    if (must_be_feasible && !scaled_feasible(x)) continue;
    const double z = idw_distance(samples_, x, kind);
    if (z > best_z) {
      best_z = z;
      best = x;
    }
  }
  if (best_z >= 0.0) return best;

  // Collapsed swarm: fall back to a seeded uniform draw.
  Rng rng(derive_seed(config_.seed, 0x5eedULL + static_cast<std::uint64_t>(samples_.size())));
  Vector x(candidate.size());
  for (int attempt = 0; attempt < kMaxFallbackDraws; ++attempt) {
    for (Eigen::Index j = 0; j < x.size(); ++j) x(j) = rng.uniform(-1.0, 1.0);
    if (nearest_distance(samples_, x) <= kDuplicateRadius) continue;
    if (must_be_feasible && !scaled_feasible(x)) continue;
    return x;
  }
  throw Error(ErrorKind::kLowFeasibleVolume, "glis: no feasible non-duplicate point found");
}

void Glis::observe(const Vector& x, double f) {
  if (phase_ == GlisPhase::kFinished) {
    throw Error(ErrorKind::kInvalidPhase, "glis: observe() after the evaluation budget is spent");
  }
  if (x.size() != spec_.dim()) {
    throw Error(ErrorKind::kDimensionMismatch, "glis: observed point has wrong dimension");
  }
  if (!std::isfinite(f) || !x.allFinite()) {
    throw Error(ErrorKind::kNonFinite, "glis: observed point and value must be finite");
  }

  Vector x_bar = scaling_.to_scaled(x);
  if (pending_ && (scaling_.to_original(*pending_).array() == x.array()).all()) x_bar = *pending_;
  pending_.reset();

  if (samples_.find(x_bar)) {
    throw Error(ErrorKind::kDuplicatePoint, "glis: point was already observed");
  }
  for (Eigen::Index i = 0; i < points_.rows(); ++i) {
    if ((points_.row(i).transpose().array() == x.array()).all()) {
      throw Error(ErrorKind::kDuplicatePoint, "glis: point was already observed");
    }
  }

  samples_.append(x_bar, f);
  const Eigen::Index i = points_.rows();
  points_.conservativeResize(i + 1, Eigen::NoChange);
  points_.row(i) = x.transpose();
  feasible_.push_back(spec_.is_feasible(x, kFeasibilityTol));
  update_best(i);

  if (phase_ == GlisPhase::kInitializing) {
    if (samples_.size() >= config_.n_init) {
      fit_surrogate();
      phase_ = GlisPhase::kRunning;
    }
  } else if (auto* rbf = std::get_if<RbfModel>(&*surrogate_)) {
    *surrogate_ = rbf->update(x_bar, f);
  } else {
    fit_surrogate();
  }
  if (samples_.size() >= config_.n_max) phase_ = GlisPhase::kFinished;
}

void Glis::fit_surrogate() {
  if (config_.surrogate == SurrogateType::kRbf) {
    surrogate_ = RbfModel::fit(samples_, config_.rbf, config_.eps_svd);
  } else {
    surrogate_ = IdwModel{config_.idw_kind, samples_};
  }
}

void Glis::update_best(Eigen::Index i) {
  if (best_index_ < 0) {
    best_index_ = i;
    return;
  }
  const auto b = static_cast<std::size_t>(best_index_);
  const auto c = static_cast<std::size_t>(i);
  if (feasible_[c] != feasible_[b]) {
    if (feasible_[c]) best_index_ = i;
    return;
  }
  if (samples_.F(i) < samples_.F(best_index_)) best_index_ = i;
}

Vector Glis::best_x() const {
  if (best_index_ < 0) throw Error(ErrorKind::kInvalidPhase, "glis: no observations yet");
  return points_.row(best_index_).transpose();
}

double Glis::best_f() const {
  if (best_index_ < 0) throw Error(ErrorKind::kInvalidPhase, "glis: no observations yet");
  return samples_.F(best_index_);
}

GlisResult glis_run(const ProblemSpec& spec, const GlisConfig& config) {
  if (!spec.objective) {
    throw Error(ErrorKind::kInvalidArgument, "glis_run: problem has no objective callback");
  }
  Glis glis(spec, config);
  GlisResult result;
  double best = std::numeric_limits<double>::infinity();
  while (glis.phase() != GlisPhase::kFinished) {
    const Vector x = glis.suggest();
    const double f = spec.objective(x);
    glis.observe(x, f);
    if (glis.feasible().back()) best = std::min(best, f);
    result.history.push_back(best);
  }
  result.x_best = glis.best_x();
  result.f_best = glis.best_f();
  result.points = glis.points();
  result.values = glis.samples().F;
  return result;
}

}  // namespace glis
