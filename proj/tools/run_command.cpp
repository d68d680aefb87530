#include "run_command.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "glis/benchmark_problems.hpp"
#include "glis/error.hpp"
#include "glis/random.hpp"

namespace glis::cli {
namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "config: '" + key + "' expects a number, got '" + v + "'");
  }
  return out;
}

long long parse_int(const std::string& key, const std::string& v) {
  const double d = parse_double(key, v);
  if (d != std::floor(d)) {
    throw Error(ErrorKind::kInvalidArgument, "config: '" + key + "' expects an integer");
  }
  return static_cast<long long>(d);
}

Vector parse_list(const std::string& key, const std::string& v) {
  std::vector<double> values;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(parse_double(key, trim(item)));
  return Eigen::Map<Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw Error(ErrorKind::kInvalidArgument, "config: '" + key + "' expects true/false");
}

std::string registry_list() {
  std::string out;
  for (const auto& n : benchmark_names()) out += (out.empty() ? "" : ", ") + n;
  return out;
}

}  // namespace

void RunConfig::validate() const {
  if (problem.empty()) throw Error(ErrorKind::kInvalidArgument, "no problem given");
  if (n_test < 1) throw Error(ErrorKind::kInvalidArgument, "n_test must be >= 1");
  if (n_max < 0 || n_init < 0) {
    throw Error(ErrorKind::kInvalidArgument, "n_max and n_init must be >= 0");
  }
}

RunConfig load_config_file(const std::string& path, const RunConfig& base) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot open config file '" + path + "'");
  RunConfig c = base;
  c.problem.clear();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::kInvalidArgument,
                  path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "problem") c.problem = value;
    else if (key == "n_test") c.n_test = static_cast<int>(parse_int(key, value));
    else if (key == "n_max") c.n_max = static_cast<int>(parse_int(key, value));
    else if (key == "n_init") c.n_init = static_cast<int>(parse_int(key, value));
    else if (key == "seed") c.seed = static_cast<std::uint64_t>(parse_int(key, value));
    else if (key == "alpha") c.alpha = parse_double(key, value);
    else if (key == "delta") c.delta = parse_double(key, value);
    else if (key == "epsilon") c.epsilon = parse_double(key, value);
    else if (key == "rbf") c.rbf = value;
    else if (key == "eps_svd") c.eps_svd = parse_double(key, value);
    else if (key == "divide_by_n") c.divide_by_n = parse_bool(key, value);
    else if (key == "out") c.out = value;
    else if (key == "lower") c.lower = parse_list(key, value);
    else if (key == "upper") c.upper = parse_list(key, value);
    else {
      throw Error(ErrorKind::kInvalidArgument,
                  path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (c.problem.empty()) {
    throw Error(ErrorKind::kInvalidArgument, path + ": missing 'problem' (one of: " +
                                                 registry_list() + ")");
  }
  return c;
}

GlisConfig make_glis_config(const RunConfig& cfg, std::uint64_t run_seed) {
  GlisConfig g;
  if (cfg.alpha) g.acquisition.alpha = *cfg.alpha;
  if (cfg.delta) g.acquisition.delta = *cfg.delta;
  if (cfg.epsilon) g.rbf.epsilon = *cfg.epsilon;
  if (cfg.rbf) {
    if (*cfg.rbf == "idw") {
      g.surrogate = SurrogateType::kIdw;
    } else {
      const auto kernel = parse_rbf_kernel(*cfg.rbf);
      if (!kernel) {
        throw Error(ErrorKind::kInvalidArgument, "unknown rbf kind '" + *cfg.rbf + "'");
      }
      g.rbf.kernel = *kernel;
    }
  }
  if (cfg.eps_svd) g.eps_svd = *cfg.eps_svd;
  g.n_max = cfg.n_max;
  g.n_init = cfg.n_init;
  g.divide_hyperparams_by_n = cfg.divide_by_n;
  g.seed = run_seed;
  return g;
}

int run_command(const RunConfig& input, std::ostream& log, std::ostream& err) {
  try {
    RunConfig cfg = input;
    if (std::filesystem::is_regular_file(cfg.problem)) cfg = load_config_file(cfg.problem, cfg);
    cfg.validate();

    BenchmarkProblem problem;
    try {
      problem = get_benchmark(cfg.problem);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kUnknownBenchmark) throw;
      err << "error: unknown problem '" << cfg.problem
          << "' (not a config file either); registry: " << registry_list() << "\n";
      return 1;
    }
    if (cfg.lower) problem.spec.lower = *cfg.lower;
    if (cfg.upper) problem.spec.upper = *cfg.upper;
    problem.spec.validate();

    const Eigen::Index n = problem.spec.dim();
    std::filesystem::create_directories(cfg.out);
    const auto runs_path = std::filesystem::path(cfg.out) / "runs.csv";
    const auto summary_path = std::filesystem::path(cfg.out) / "summary.csv";
    std::ofstream runs(runs_path);
    if (!runs) throw Error(ErrorKind::kInvalidArgument, "cannot write " + runs_path.string());

    runs << "run,eval_index";
    for (Eigen::Index j = 0; j < n; ++j) runs << ",x" << (j + 1);
    runs << ",f,best_so_far\n";

    std::vector<std::vector<double>> best_so_far;
    for (int r = 0; r < cfg.n_test; ++r) {
      const GlisConfig g = make_glis_config(cfg, derive_seed(cfg.seed, static_cast<std::uint64_t>(r)));
      const GlisResult res = glis_run(problem.spec, g);
      for (Eigen::Index k = 0; k < res.points.rows(); ++k) {
        runs << r << "," << (k + 1);
        for (Eigen::Index j = 0; j < n; ++j) runs << "," << fmt(res.points(k, j));
        runs << "," << fmt(res.values(k)) << "," << fmt(res.history[static_cast<std::size_t>(k)])
             << "\n";
      }
      best_so_far.push_back(res.history);
      log << "run " << r << ": f_best = " << fmt(res.f_best) << "\n";
    }

    std::ofstream summary(summary_path);
    if (!summary) throw Error(ErrorKind::kInvalidArgument, "cannot write " + summary_path.string());
    summary << "eval_index,mean,best,worst\n";
    const std::size_t evals = best_so_far.front().size();
    for (std::size_t k = 0; k < evals; ++k) {
      double sum = 0.0;
      double best = std::numeric_limits<double>::infinity();
      double worst = -std::numeric_limits<double>::infinity();
      for (const auto& h : best_so_far) {
        sum += h[k];
        best = std::min(best, h[k]);
        worst = std::max(worst, h[k]);
      }
      summary << (k + 1) << "," << fmt(sum / static_cast<double>(best_so_far.size())) << ","
              << fmt(best) << "," << fmt(worst) << "\n";
    }
    log << "wrote " << runs_path.string() << " and " << summary_path.string() << "\n";
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace glis::cli
