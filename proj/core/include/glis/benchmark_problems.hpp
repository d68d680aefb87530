#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "glis/problem.hpp"

namespace glis {

/// A named test problem with its known global optimum.
struct BenchmarkProblem {
  std::string name;
  ProblemSpec spec;
  std::optional<double> known_optimum_value;
  std::vector<Vector> known_optimizers;
};

/// Registry keys: "ackley", "adjiman", "branin", "camelsixhumps", "hartman3",
/// "hartman6", "himmelblau", "rosenbrock8", "stepfunction2",
/// "styblinski-tang5", "camelsixhumps-constrained", "f1d", "admm-qp".
const std::vector<std::string>& benchmark_names();

/// The ten box-constrained comparison problems, in registry order.
const std::vector<std::string>& table_benchmark_names();

/// Throws kUnknownBenchmark for names outside the registry.
BenchmarkProblem get_benchmark(std::string_view name);

/// One-dimensional multimodal test function on [-3, 3]:
///   (1 + x sin(2x) cos(3x) / (1 + x^2))^2 + x^2 / 12 + x / 10.
double f_1d(double x);

/// Global minimizer and minimum of f_1d on [-3, 3].
inline constexpr double kF1dArgmin = -0.9597685698137851;
inline constexpr double kF1dMinimum = 0.2795044960582651;

// Individual test functions (x must have the dimension of the matching row).
double ackley(const Vector& x);
double adjiman(const Vector& x);
double branin(const Vector& x);
double camel_six_humps(const Vector& x);
double hartman3(const Vector& x);
double hartman6(const Vector& x);
double himmelblau(const Vector& x);
double rosenbrock(const Vector& x);
double step2(const Vector& x);
double styblinski_tang(const Vector& x);

/// Linear part (5 rows) and disk constraint of the constrained camel problem.
Matrix camel_constraint_matrix();
Vector camel_constraint_rhs();
/// x1^2 + (x2 + 0.1)^2 - 0.5 as a one-element vector.
Vector camel_disk_constraint(const Vector& x);

}  // namespace glis
