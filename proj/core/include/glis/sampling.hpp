#pragma once

#include <cstdint>

#include "glis/problem.hpp"
#include "glis/pso.hpp"
#include "glis/random.hpp"
#include "glis/surrogate.hpp"

namespace glis {

/// N x n Latin hypercube design in [lower, upper]: along every coordinate each
/// of the N equal-width bins holds exactly one point.
Matrix latin_hypercube(Eigen::Index n, Eigen::Index count, const Vector& lower,
                       const Vector& upper, Rng& rng);
Matrix latin_hypercube(Eigen::Index n, Eigen::Index count, const Vector& lower,
                       const Vector& upper, std::uint64_t seed);

inline constexpr int kMaxOversamplingRounds = 10;

/// Oversample-and-filter LHS returning exactly n_init feasible points inside
/// the box of `spec`. The design size grows by
/// ceil(min(20, 1.1 n_init / N_k) N) (or 20 N when nothing was feasible).
/// Throws kNotFullDimensional when the linear part has Chebyshev radius 0 and
/// kLowFeasibleVolume after kMaxOversamplingRounds unsuccessful rounds.
Matrix constrained_lhs(const ProblemSpec& spec, Eigen::Index n_init, std::uint64_t seed);

/// Radius of the largest ball inside {lower <= x <= upper, A x <= b}.
/// Throws kInfeasible when the set is empty.
double chebyshev_radius(const ProblemSpec& spec);

/// Greedy design that starts at `first` and repeatedly adds the feasible point
/// maximizing the IDW distance function z over the box (solved by PSO with a
/// quadratic penalty on constraint violation).
Matrix idw_feasible_init(const ProblemSpec& spec, const Vector& first, Eigen::Index n_init,
                         const PsoConfig& pso = {},
                         IdwWeightKind kind = IdwWeightKind::kInverseSquared);

}  // namespace glis
