#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "glis/error.hpp"
#include "run_command.hpp"

int main(int argc, char** argv) {
  // Precedence: command-line flag > config file > $GLIS_SEED > default.
  glis::cli::RunConfig base;
  if (const char* env = std::getenv("GLIS_SEED")) {
    try {
      base.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: GLIS_SEED must be a nonnegative integer\n";
      return 1;
    }
  }

  glis::cli::RunConfig flags = base;
  CLI::App app{"Run GLIS on a registered benchmark or a key=value problem file"};
  app.add_option("-p,--problem", flags.problem, "Registry name or config file path");
  app.add_option("--config", flags.problem, "Config file (same as passing its path to --problem)");
  auto* n_test = app.add_option("-n,--n-test", flags.n_test, "Number of independent runs")
                     ->check(CLI::PositiveNumber);
  auto* n_max = app.add_option("--n-max", flags.n_max, "Evaluations per run (default 20 n)");
  auto* n_init = app.add_option("--n-init", flags.n_init, "Initial samples (default 2 n)");
  auto* seed = app.add_option("-s,--seed", flags.seed, "Base seed (default: $GLIS_SEED or 0)");
  auto* alpha = app.add_option("--alpha", flags.alpha, "Variance weight");
  auto* delta = app.add_option("--delta", flags.delta, "Distance weight");
  auto* epsilon = app.add_option("--epsilon", flags.epsilon, "RBF shape parameter");
  auto* rbf = app.add_option("--rbf", flags.rbf,
                             "inverse_quadratic, gaussian, multiquadric, thin_plate_spline, "
                             "linear, inverse_multiquadric or idw");
  auto* eps_svd = app.add_option("--eps-svd", flags.eps_svd, "Singular-value truncation threshold");
  auto* no_divide = app.add_flag("!--no-divide-by-n", flags.divide_by_n,
                                 "Use alpha, delta and epsilon as given instead of dividing by n");
  auto* out = app.add_option("-o,--out", flags.out, "Output directory for runs.csv and summary.csv");

  app.callback([&] {
    if (flags.problem.empty()) throw CLI::RequiredError("--problem or --config");
  });
  CLI11_PARSE(app, argc, argv);

  glis::cli::RunConfig cfg = flags;
  if (std::filesystem::is_regular_file(flags.problem)) {
    try {
      cfg = glis::cli::load_config_file(flags.problem, base);
    } catch (const glis::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
    auto take = [](const CLI::Option* opt, auto& field, const auto& value) {
      if (opt->count() > 0) field = value;
    };
    take(n_test, cfg.n_test, flags.n_test);
    take(n_max, cfg.n_max, flags.n_max);
    take(n_init, cfg.n_init, flags.n_init);
    take(seed, cfg.seed, flags.seed);
    take(alpha, cfg.alpha, flags.alpha);
    take(delta, cfg.delta, flags.delta);
    take(epsilon, cfg.epsilon, flags.epsilon);
    take(rbf, cfg.rbf, flags.rbf);
    take(eps_svd, cfg.eps_svd, flags.eps_svd);
    take(no_divide, cfg.divide_by_n, flags.divide_by_n);
    take(out, cfg.out, flags.out);
  }
  return glis::cli::run_command(cfg, std::cout, std::cerr);
}
