#include "glis/benchmark_problems.hpp"

#include <array>
#include <cmath>
#include <memory>
#include <numbers>

#include "glis/admm_qp.hpp"
#include "glis/error.hpp"

namespace glis {
namespace {

using std::numbers::pi;

Vector vec(std::initializer_list<double> values) {
  Vector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v(i++) = x;
  return v;
}

ProblemSpec box_problem(Vector lower, Vector upper, Objective f) {
  ProblemSpec spec;
  spec.lower = std::move(lower);
  spec.upper = std::move(upper);
  spec.objective = std::move(f);
  return spec;
}

constexpr std::array<double, 4> kHartmanC = {1.0, 1.2, 3.0, 3.2};

double hartman(const Vector& x, const double* a, const double* p, Eigen::Index n) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < 4; ++i) {
    double inner = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      const double d = x(j) - p[i * n + j];
      inner += a[i * n + j] * d * d;
    }
    total -= kHartmanC[static_cast<std::size_t>(i)] * std::exp(-inner);
  }
  return total;
}

void require_dim(const Vector& x, Eigen::Index n, const char* name) {
  if (x.size() != n) {
    throw Error(ErrorKind::kDimensionMismatch, std::string(name) + ": expects dimension " +
                                                   std::to_string(n));
  }
}

}  // namespace

double f_1d(double x) {
  const double t = 1.0 + x * std::sin(2.0 * x) * std::cos(3.0 * x) / (1.0 + x * x);
  return t * t + x * x / 12.0 + x / 10.0;
}

double ackley(const Vector& x) {
  const double n = static_cast<double>(x.size());
  const double sq = x.squaredNorm() / n;
  const double cs = (2.0 * pi * x.array()).cos().sum() / n;
  return -20.0 * std::exp(-0.2 * std::sqrt(sq)) - std::exp(cs) + 20.0 + std::exp(1.0);
}

double adjiman(const Vector& x) {
  require_dim(x, 2, "adjiman");
  return std::cos(x(0)) * std::sin(x(1)) - x(0) / (x(1) * x(1) + 1.0);
}

double branin(const Vector& x) {
  require_dim(x, 2, "branin");
  const double b = 5.1 / (4.0 * pi * pi);
  const double c = 5.0 / pi;
  const double t = 1.0 / (8.0 * pi);
  const double q = x(1) - b * x(0) * x(0) + c * x(0) - 6.0;
  return q * q + 10.0 * (1.0 - t) * std::cos(x(0)) + 10.0;
}

double camel_six_humps(const Vector& x) {
  require_dim(x, 2, "camelsixhumps");
  const double x1 = x(0), x2 = x(1);
  const double x1s = x1 * x1, x2s = x2 * x2;
  return (4.0 - 2.1 * x1s + x1s * x1s / 3.0) * x1s + x1 * x2 + (-4.0 + 4.0 * x2s) * x2s;
}

double hartman3(const Vector& x) {
  require_dim(x, 3, "hartman3");
  static constexpr double a[] = {3.0, 10, 30, 0.1, 10, 35, 3.0, 10, 30, 0.1, 10, 35};
  static constexpr double p[] = {0.3689, 0.1170, 0.2673, 0.4699, 0.4387, 0.7470,
                                 0.1091, 0.8732, 0.5547, 0.0381, 0.5743, 0.8828};
  return hartman(x, a, p, 3);
}

double hartman6(const Vector& x) {
  require_dim(x, 6, "hartman6");
  static constexpr double a[] = {10,   3,  17,   3.5, 1.7, 8,  0.05, 10, 17, 0.1, 8,  14,
                                 3,    3.5, 1.7, 10,  17,  8,  17,   8,  0.05, 10, 0.1, 14};
  static constexpr double p[] = {0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886,
                                 0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991,
                                 0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650,
                                 0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381};
  return hartman(x, a, p, 6);
}

double himmelblau(const Vector& x) {
  require_dim(x, 2, "himmelblau");
  const double a = x(0) * x(0) + x(1) - 11.0;
  const double b = x(0) + x(1) * x(1) - 7.0;
  return a * a + b * b;
}

double rosenbrock(const Vector& x) {
  double total = 0.0;
  for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
    const double a = x(i + 1) - x(i) * x(i);
    const double b = x(i) - 1.0;
    total += 100.0 * a * a + b * b;
  }
  return total;
}

double step2(const Vector& x) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double s = std::floor(x(i) + 0.5);
    total += s * s;
  }
  return total;
}

double styblinski_tang(const Vector& x) {
  const auto a = x.array();
  return 0.5 * (a.pow(4) - 16.0 * a.square() + 5.0 * a).sum();
}

Matrix camel_constraint_matrix() {
  Matrix a(5, 2);
  a << 1.6295, 1.0,     //
      -1.0, 4.4553,     //
      -4.3023, -1.0,    //
      -5.6905, -12.1374,  //
      17.6198, 1.0;
  return a;
}

Vector camel_constraint_rhs() { return vec({3.0786, 2.7417, -1.4909, 1.0, 32.5198}); }

Vector camel_disk_constraint(const Vector& x) {
  Vector g(1);
  g(0) = x(0) * x(0) + (x(1) + 0.1) * (x(1) + 0.1) - 0.5;
  return g;
}

const std::vector<std::string>& table_benchmark_names() {
  static const std::vector<std::string> names = {
      "ackley",     "adjiman",     "branin",        "camelsixhumps",   "hartman3",
      "hartman6",   "himmelblau",  "rosenbrock8",   "stepfunction2",   "styblinski-tang5"};
  return names;
}

const std::vector<std::string>& benchmark_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> all = table_benchmark_names();
    all.insert(all.end(), {"camelsixhumps-constrained", "f1d", "admm-qp"});
    return all;
  }();
  return names;
}

BenchmarkProblem get_benchmark(std::string_view name) {
  BenchmarkProblem b;
  b.name = std::string(name);
  if (name == "ackley") {
    b.spec = box_problem(vec({-5, -5}), vec({5, 5}), ackley);
    b.known_optimum_value = 0.0;
    b.known_optimizers = {vec({0, 0})};
  } else if (name == "adjiman") {
    b.spec = box_problem(vec({-1, -1}), vec({2, 1}), adjiman);
    b.known_optimum_value = -2.021806783359787;
    b.known_optimizers = {vec({2.0, 0.10578347300117849})};
  } else if (name == "branin") {
    b.spec = box_problem(vec({-5, 0}), vec({10, 15}), branin);
    b.known_optimum_value = 0.39788735772973816;
    b.known_optimizers = {vec({-pi, 12.275}), vec({pi, 2.275}), vec({3.0 * pi, 2.475})};
  } else if (name == "camelsixhumps") {
    b.spec = box_problem(vec({-5, -5}), vec({5, 5}), camel_six_humps);
    b.known_optimum_value = -1.0316284534898774;
    b.known_optimizers = {vec({0.08984200893527233, -0.712656403019058}),
                          vec({-0.08984200893527233, 0.712656403019058})};
  } else if (name == "hartman3") {
    b.spec = box_problem(Vector::Zero(3), Vector::Ones(3), hartman3);
    b.known_optimum_value = -3.862779787332663;
    b.known_optimizers = {vec({0.11458888122541287, 0.5556488954739371, 0.8525469842172746})};
  } else if (name == "hartman6") {
    b.spec = box_problem(Vector::Zero(6), Vector::Ones(6), hartman6);
    b.known_optimum_value = -3.3223680114155147;
    b.known_optimizers = {vec({0.20168950909365746, 0.15001069354111374, 0.4768739729250998,
                               0.2753324275220782, 0.3116516172395686, 0.6573005345536702})};
  } else if (name == "himmelblau") {
    b.spec = box_problem(vec({-6, -6}), vec({6, 6}), himmelblau);
    b.known_optimum_value = 0.0;
    b.known_optimizers = {vec({3.0, 2.0}), vec({-2.805118086952745, 3.131312518250573}),
                          vec({-3.779310253377747, -3.283185991286170}),
                          vec({3.584428340330492, -1.848126526964404})};
  } else if (name == "rosenbrock8") {
    b.spec = box_problem(Vector::Constant(8, -30), Vector::Constant(8, 30), rosenbrock);
    b.known_optimum_value = 0.0;
    b.known_optimizers = {Vector::Ones(8)};
  } else if (name == "stepfunction2") {
    b.spec = box_problem(Vector::Constant(4, -100), Vector::Constant(4, 100), step2);
    b.known_optimum_value = 0.0;
    b.known_optimizers = {Vector::Zero(4)};
  } else if (name == "styblinski-tang5") {
    b.spec = box_problem(Vector::Constant(5, -5), Vector::Constant(5, 5), styblinski_tang);
    b.known_optimum_value = -195.8308285188571;
    b.known_optimizers = {Vector::Constant(5, -2.9035340151190754)};
  } else if (name == "camelsixhumps-constrained") {
    b.spec = box_problem(vec({-2, -1}), vec({2, 1}), camel_six_humps);
    b.spec.lin_A = camel_constraint_matrix();
    b.spec.lin_b = camel_constraint_rhs();
    b.spec.constraint_fn = camel_disk_constraint;
    b.spec.eval_outside_feasible = false;
    // Vertex where the third linear row and the disk are both active.
    b.known_optimum_value = -0.58443314201848047;
    b.known_optimizers = {vec({0.21306191086215981, 0.57424374089772985})};
  } else if (name == "f1d") {
    b.spec = box_problem(vec({-3}), vec({3}), [](const Vector& x) { return f_1d(x(0)); });
    b.known_optimum_value = kF1dMinimum;
    b.known_optimizers = {vec({kF1dArgmin})};
  } else if (name == "admm-qp") {
    auto study = std::make_shared<AdmmStudy>(appendix_qp());
    b.spec = box_problem(vec({0.01, 0.01}), vec({3, 3}), [study](const Vector& x) {
      return study->performance(x(0), x(1));
    });
  } else {
    std::string known;
    for (const auto& n : benchmark_names()) known += (known.empty() ? "" : ", ") + n;
    throw Error(ErrorKind::kUnknownBenchmark,
                "unknown problem '" + std::string(name) + "'; registry: " + known);
  }
  return b;
}

}  // namespace glis
