#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "glis/glis.hpp"

namespace glis::cli {

struct RunConfig {
  /// Registry name, or the path of a key=value config file.
  std::string problem;
  int n_test = 1;
  /// 0 selects 20 n.
  int n_max = 0;
  /// 0 selects 2 n.
  int n_init = 0;
  std::uint64_t seed = 0;
  std::optional<double> alpha;
  std::optional<double> delta;
  std::optional<double> epsilon;
  std::optional<std::string> rbf;
  std::optional<double> eps_svd;
  /// Divide alpha, delta and epsilon by n (the default).
  bool divide_by_n = true;
  /// Output directory for runs.csv and summary.csv.
  std::string out = ".";
  /// Box overrides for the named problem.
  std::optional<Vector> lower;
  std::optional<Vector> upper;

  void validate() const;
};

/// Reads `key = value` lines ('#' starts a comment) on top of base. Keys:
/// problem, n_test, n_max, n_init, seed, alpha, delta, epsilon, rbf, eps_svd,
/// divide_by_n, out, lower, upper (comma-separated bound overrides).
RunConfig load_config_file(const std::string& path, const RunConfig& base);

/// GLIS configuration for one run of the given problem.
GlisConfig make_glis_config(const RunConfig& cfg, std::uint64_t run_seed);

/// Runs the problem cfg.n_test times and writes <out>/runs.csv and
/// <out>/summary.csv. Returns 0 on success, 1 on configuration errors
/// (message on err).
int run_command(const RunConfig& cfg, std::ostream& log, std::ostream& err);

}  // namespace glis::cli
