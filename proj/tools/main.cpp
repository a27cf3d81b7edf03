#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bernsvm/bench.hpp"
#include "bernsvm/csv.hpp"
#include "bernsvm/cv.hpp"
#include "bernsvm/gcd.hpp"
#include "bernsvm/irls.hpp"
#include "bernsvm/lla.hpp"
#include "bernsvm/metrics.hpp"
#include "bernsvm/model_io.hpp"
#include "bernsvm/oracle.hpp"
#include "bernsvm/path.hpp"
#include "bernsvm/simdata.hpp"

namespace {

using namespace bernsvm;

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNotConverged = 3;

struct FitFlags {
  std::string data_path;
  std::string label = "y";
  std::string penalty = "en";
  std::string engine = "irls";
  double lambda1 = 0.1;
  double lambda2 = 0.0;
  double delta = 2.0;
  double a = 0.0;  // 0 means family default
  std::string weights_file;
  int max_passes = 10000;
  double tol = 1e-7;
  bool strict = false;
};

void add_common_fit_flags(CLI::App* cmd, FitFlags& flags) {
  cmd->add_option("--data", flags.data_path, "input CSV")->required();
  cmd->add_option("--label", flags.label, "label column name");
  cmd->add_option("--penalty", flags.penalty, "en | aen | scaden | mcpen");
  cmd->add_option("--engine", flags.engine, "gcd | irls");
  cmd->add_option("--lambda2", flags.lambda2, "ridge level");
  cmd->add_option("--delta", flags.delta, "smoothing half-width");
  cmd->add_option("--a", flags.a, "SCAD/MCP concavity");
  cmd->add_option("--weights-file", flags.weights_file, "adaptive weights, one per line");
  cmd->add_option("--max-passes", flags.max_passes, "solver pass budget");
  cmd->add_option("--tol", flags.tol, "convergence tolerance");
  cmd->add_flag("--strict", flags.strict, "exit 3 when the solver does not converge");
}

Eigen::VectorXd read_weights_file(const std::string& path, Eigen::Index p) {
  std::ifstream in(path);
  if (!in) {
    throw csv_error("cannot open weights file '" + path + "'");
  }
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    values.push_back(std::stod(line));
  }
  if (static_cast<Eigen::Index>(values.size()) != p) {
    throw csv_error("weights file '" + path + "' holds " + std::to_string(values.size()) +
                    " values for " + std::to_string(p) + " features");
  }
  return Eigen::Map<const Eigen::VectorXd>(values.data(),
                                           static_cast<Eigen::Index>(values.size()));
}

PenaltySpec penalty_from_flags(const FitFlags& flags, Eigen::Index p) {
  const PenaltyFamily family = family_from_name(flags.penalty);
  switch (family) {
    case PenaltyFamily::EN:
      return PenaltySpec::elastic_net(flags.lambda1, flags.lambda2);
    case PenaltyFamily::AEN: {
      if (flags.weights_file.empty()) {
        throw std::invalid_argument("penalty aen requires --weights-file");
      }
      return PenaltySpec::adaptive(flags.lambda1, flags.lambda2,
                                   read_weights_file(flags.weights_file, p));
    }
    case PenaltyFamily::SCADEN:
      return flags.a > 0.0 ? PenaltySpec::scad(flags.lambda1, flags.lambda2, flags.a)
                           : PenaltySpec::scad(flags.lambda1, flags.lambda2);
    case PenaltyFamily::MCPEN:
      return flags.a > 0.0 ? PenaltySpec::mcp(flags.lambda1, flags.lambda2, flags.a)
                           : PenaltySpec::mcp(flags.lambda1, flags.lambda2);
  }
  throw std::invalid_argument("unknown penalty");
}

ModelFit dispatch_fit(const StandardizedDesign& design, const Eigen::VectorXd& y,
                      const LossSpec& loss, const PenaltySpec& penalty, Engine engine,
                      const SolverOptions& opts) {
  if (!penalty.is_convex()) {
    return lla_fit(design, y, loss, penalty, opts, engine);
  }
  return engine == Engine::GCD ? gcd_fit(design, y, loss, penalty, opts)
                               : irls_fit(design, y, loss, penalty, opts);
}

SavedModel to_saved_model(const ModelFit& fit, const StandardizedDesign& design,
                          const LoadedCsv& csv, const PenaltySpec& penalty, Engine engine) {
  const auto [b0, beta] = destandardize_coefficients(fit.beta0, fit.beta, design);
  SavedModel model;
  model.beta0 = b0;
  model.beta = beta;
  model.feature_names = csv.feature_names;
  model.label_name = csv.label_name;
  model.delta = fit.delta;
  model.penalty_family = family_name(penalty.family());
  model.lambda1 = penalty.lambda1();
  model.lambda2 = penalty.lambda2();
  model.a = penalty.a();
  model.engine = engine_name(engine);
  model.converged = fit.converged;
  model.passes = fit.passes;
  model.objective = fit.objective;
  model.dropped_columns = design.dropped;
  return model;
}

std::string truth_path_for(const std::string& csv_path) {
  if (csv_path.size() > 4 && csv_path.substr(csv_path.size() - 4) == ".csv") {
    return csv_path.substr(0, csv_path.size() - 4) + ".truth.json";
  }
  return csv_path + ".truth.json";
}

int cmd_fit(const FitFlags& flags, double lambda1, const std::string& out_path) {
  FitFlags f = flags;
  f.lambda1 = lambda1;
  const LoadedCsv csv = load_csv(f.data_path, f.label);
  if (csv.remapped_zero_one) {
    std::cerr << "note: labels arrived as {0,1}; 0 was mapped to -1\n";
  }
  const LossSpec loss(f.delta);
  const StandardizedDesign design = standardize(csv.data);
  const PenaltySpec penalty = penalty_from_flags(f, design.p());
  const Engine engine = engine_from_name(f.engine);
  SolverOptions opts;
  opts.max_passes = f.max_passes;
  opts.tol = f.tol;

  const ModelFit fit = dispatch_fit(design, csv.data.y, loss, penalty, engine, opts);
  save_model(out_path, to_saved_model(fit, design, csv, penalty, engine));

  std::cout << "penalty=" << family_name(penalty.family()) << " engine=" << engine_name(engine)
            << " lambda1=" << format_double(penalty.lambda1())
            << " lambda2=" << format_double(penalty.lambda2())
            << " delta=" << format_double(f.delta) << "\n"
            << "objective=" << format_double(fit.objective) << " nnz=" << fit.nonzero_count()
            << " passes=" << fit.passes << " converged=" << (fit.converged ? "true" : "false")
            << "\n"
            << "model written to " << out_path << "\n";
  if (f.strict && !fit.converged) return kExitNotConverged;
  return 0;
}

int cmd_path(const FitFlags& flags, int n_lambda, double ratio, const std::string& out_path) {
  const LoadedCsv csv = load_csv(flags.data_path, flags.label);
  if (csv.remapped_zero_one) {
    std::cerr << "note: labels arrived as {0,1}; 0 was mapped to -1\n";
  }
  const LossSpec loss(flags.delta);
  const StandardizedDesign design = standardize(csv.data);
  const PenaltySpec penalty = penalty_from_flags(flags, design.p());
  const Engine engine = engine_from_name(flags.engine);
  SolverOptions opts;
  opts.max_passes = flags.max_passes;
  opts.tol = flags.tol;
  const double use_ratio = ratio > 0.0 ? ratio : default_lambda_ratio(design.n(), design.p());
  const LambdaGrid grid = lambda_grid(design, csv.data.y, loss, penalty, n_lambda, use_ratio);
  const PathResult path =
      fit_path(design, csv.data.y, loss, penalty, grid.values, engine, opts);

  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  out << "lambda,nnz,objective,passes,converged\n";
  bool all_converged = true;
  for (std::size_t k = 0; k < path.fits.size(); ++k) {
    const ModelFit& fit = path.fits[k];
    all_converged = all_converged && fit.converged;
    out << format_double(path.lambdas[static_cast<Eigen::Index>(k)]) << ','
        << path.nonzero_counts[k] << ',' << format_double(fit.objective) << ',' << fit.passes
        << ',' << (fit.converged ? "true" : "false") << '\n';
  }
  std::cout << "path of " << path.fits.size() << " fits written to " << out_path << "\n";
  if (flags.strict && !all_converged) return kExitNotConverged;
  return 0;
}

int cmd_cv(const FitFlags& flags, int n_lambda, double ratio, int folds, std::uint64_t seed,
           int threads, const std::string& lambda2_grid, const std::string& table_path,
           const std::string& model_path) {
  const LoadedCsv csv = load_csv(flags.data_path, flags.label);
  if (csv.remapped_zero_one) {
    std::cerr << "note: labels arrived as {0,1}; 0 was mapped to -1\n";
  }
  const LossSpec loss(flags.delta);
  const StandardizedDesign design = standardize(csv.data);
  FitFlags f = flags;
  const Engine engine = engine_from_name(f.engine);
  SolverOptions opts;
  opts.max_passes = f.max_passes;
  opts.tol = f.tol;
  const double use_ratio = ratio > 0.0 ? ratio : default_lambda_ratio(design.n(), design.p());

  // Optional second dimension: sweep the l1 path per candidate ridge level
  // and keep the best pair.
  if (!lambda2_grid.empty()) {
    std::vector<double> lambda2_values;
    std::stringstream ss(lambda2_grid);
    std::string tok;
    while (std::getline(ss, tok, ',')) lambda2_values.push_back(std::stod(tok));
    const PenaltySpec base = penalty_from_flags(f, design.p());
    const LambdaGrid grid =
        lambda_grid(design, csv.data.y, loss, base, n_lambda, use_ratio);
    const Cv2dResult cv2 =
        cross_validate_2d(csv.data, loss, base, lambda2_values, grid, folds, seed, engine,
                          opts, CvMetric::MR, threads);
    std::cout << "selected lambda2=" << format_double(cv2.lambda2_min)
              << " lambda1=" << format_double(cv2.lambda1_min)
              << " cv_mr=" << format_double(cv2.best_mean_metric) << "\n";
    f.lambda2 = cv2.lambda2_min;
  }

  const PenaltySpec penalty = penalty_from_flags(f, design.p());
  const LambdaGrid grid = lambda_grid(design, csv.data.y, loss, penalty, n_lambda, use_ratio);
  const CvResult cv =
      cross_validate(csv.data, loss, penalty, grid, folds, seed, engine, opts,
                     CvMetric::MR, threads);
  const PathResult full_path =
      fit_path(design, csv.data.y, loss, penalty, grid.values, engine, opts);

  std::ofstream out(table_path);
  if (!out) throw std::runtime_error("cannot write '" + table_path + "'");
  out << "lambda,mean_mr,sd_mr,nnz\n";
  for (Eigen::Index k = 0; k < cv.lambdas.size(); ++k) {
    out << format_double(cv.lambdas[k]) << ',' << format_double(cv.mean_metric[k]) << ','
        << format_double(cv.sd_metric[k]) << ','
        << full_path.nonzero_counts[static_cast<std::size_t>(k)] << '\n';
  }

  Eigen::Index k_min = 0;
  for (Eigen::Index k = 0; k < cv.lambdas.size(); ++k) {
    if (cv.lambdas[k] == cv.lambda_min) k_min = k;
  }
  const ModelFit& refit = full_path.fits[static_cast<std::size_t>(k_min)];
  const PenaltySpec chosen = penalty.with_lambda1(cv.lambda_min);
  save_model(model_path, to_saved_model(refit, design, csv, chosen, engine));

  std::cout << "lambda_min=" << format_double(cv.lambda_min)
            << " lambda_1se=" << format_double(cv.lambda_1se)
            << " cv_mr=" << format_double(cv.mean_metric[k_min]) << " nnz="
            << refit.nonzero_count() << "\n"
            << "table written to " << table_path << "\n"
            << "model written to " << model_path << "\n";
  if (flags.strict && !refit.converged) return kExitNotConverged;
  return 0;
}

int cmd_simulate(const std::string& scenario, Eigen::Index n, Eigen::Index p, double rho,
                 double snr, double xi, double target_prob, std::uint64_t seed,
                 const std::string& out_path) {
  ScenarioConfig config;
  config.scenario = scenario_from_name(scenario);
  config.n = n;
  config.p = p;
  config.rho = rho;
  config.snr = snr;
  config.xi = xi;
  config.target_prob = target_prob;
  config.seed = seed;
  const SimulatedData sim = generate(config);
  const std::string truth = truth_path_for(out_path);
  write_simulated(out_path, truth, sim, config);
  std::cout << "data written to " << out_path << "\n"
            << "truth written to " << truth << "\n";
  return 0;
}

int cmd_bench(const std::string& scenario, int reps, const std::string& deltas_csv,
              Eigen::Index n, Eigen::Index p, double rho, double xi, double lambda2,
              int n_lambda, int folds, std::uint64_t seed, int threads, bool verify,
              const std::string& engine, const std::string& out_path) {
  if (verify) {
    const std::vector<VerifyRow> rows = run_verification(reps, seed);
    bool all_pass = true;
    std::ostringstream table;
    table << "check,value,pass\n";
    for (const VerifyRow& row : rows) {
      all_pass = all_pass && row.pass;
      std::cout << row.name << " value=" << format_double(row.value) << ' '
                << (row.pass ? "PASS" : "FAIL") << "\n";
      table << row.name << ',' << format_double(row.value) << ','
            << (row.pass ? "true" : "false") << '\n';
    }
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
      out << table.str();
    }
    std::cout << (all_pass ? "all verification rows pass" : "verification failures recorded")
              << "\n";
    return 0;
  }

  const Scenario sc = scenario_from_name(scenario);
  if (sc == Scenario::S3) {
    S3BenchConfig config;
    config.scenario.scenario = Scenario::S3;
    config.scenario.n = n;
    config.scenario.p = p;
    config.scenario.rho = rho;
    config.scenario.xi = xi;
    config.scenario.seed = seed;
    config.reps = reps;
    config.folds = folds;
    config.lambda2 = lambda2;
    config.n_lambda = n_lambda;
    config.threads = threads;
    config.engine = engine_from_name(engine);
    const S3BenchResult result = run_s3_bench(config);
    std::ostringstream row;
    row << "scenario,rho,xi,reps,mr,se,sp,pr,rc\n"
        << scenario << ',' << format_double(rho) << ',' << format_double(xi) << ',' << reps
        << ',' << format_double(result.mr) << ',' << format_double(result.se) << ','
        << format_double(result.sp) << ',' << (result.pr ? format_double(*result.pr) : "NA")
        << ',' << (result.rc ? format_double(*result.rc) : "NA") << '\n';
    std::cout << row.str();
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
      out << row.str();
    }
    return 0;
  }

  TimingBenchConfig config;
  config.scenario.scenario = sc;
  config.scenario.n = n;
  config.scenario.p = p;
  config.scenario.rho = rho;
  config.scenario.seed = seed;
  config.reps = reps;
  config.lambda2 = lambda2;
  config.n_lambda = n_lambda;
  config.deltas.clear();
  {
    std::stringstream ss(deltas_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) config.deltas.push_back(std::stod(tok));
  }
  if (config.deltas.empty()) {
    throw std::invalid_argument("bench: --deltas must name at least one value");
  }
  const std::vector<TimingRow> rows = run_timing_bench(config);
  std::ostringstream table;
  table << "delta,gcd_time,irls_time,gcd_obj,irls_obj,gcd_nnz,irls_nnz\n";
  for (const TimingRow& row : rows) {
    table << format_double(row.delta) << ',' << format_double(row.gcd_time) << ','
          << format_double(row.irls_time) << ',' << format_double(row.gcd_obj) << ','
          << format_double(row.irls_obj) << ',' << format_double(row.gcd_nnz) << ','
          << format_double(row.irls_nnz) << '\n';
  }
  std::cout << table.str();
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << table.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse linear classification with a smoothed hinge loss"};
  app.require_subcommand(1);

  FitFlags fit_flags;
  double fit_lambda1 = 0.1;
  std::string fit_out = "model.json";
  CLI::App* fit = app.add_subcommand("fit", "fit one model");
  add_common_fit_flags(fit, fit_flags);
  fit->add_option("--lambda1", fit_lambda1, "l1 level")->required();
  fit->add_option("--out", fit_out, "model output path");

  FitFlags path_flags;
  int path_n_lambda = 100;
  double path_ratio = 0.0;
  std::string path_out = "path.csv";
  CLI::App* path_cmd = app.add_subcommand("path", "fit a lambda path");
  add_common_fit_flags(path_cmd, path_flags);
  path_cmd->add_option("--n-lambda", path_n_lambda, "grid size");
  path_cmd->add_option("--ratio", path_ratio, "lambda_min / lambda_max (0 = default)");
  path_cmd->add_option("--out", path_out, "path table output");

  FitFlags cv_flags;
  int cv_n_lambda = 100;
  double cv_ratio = 0.0;
  int cv_folds = 10;
  std::uint64_t cv_seed = 1;
  int cv_threads = 1;
  std::string cv_lambda2_grid;
  std::string cv_table = "cv.csv";
  std::string cv_model = "model.json";
  CLI::App* cv = app.add_subcommand("cv", "cross-validated lambda selection");
  add_common_fit_flags(cv, cv_flags);
  cv->add_option("--n-lambda", cv_n_lambda, "grid size");
  cv->add_option("--ratio", cv_ratio, "lambda_min / lambda_max (0 = default)");
  cv->add_option("--folds", cv_folds, "fold count");
  cv->add_option("--seed", cv_seed, "fold assignment seed");
  cv->add_option("--threads", cv_threads, "parallel folds");
  cv->add_option("--lambda2-grid", cv_lambda2_grid,
                 "comma list of ridge levels to select over (off by default)");
  cv->add_option("--out-table", cv_table, "per-lambda CV table");
  cv->add_option("--out-model", cv_model, "refit model output");

  std::string sim_scenario = "s1";
  Eigen::Index sim_n = 100, sim_p = 5000;
  double sim_rho = 0.5, sim_snr = 3.0, sim_xi = 0.3, sim_target = 0.3;
  std::uint64_t sim_seed = 1;
  std::string sim_out = "data.csv";
  CLI::App* sim = app.add_subcommand("simulate", "draw a benchmark dataset");
  sim->add_option("--scenario", sim_scenario, "s1 | s2 | s3")->required();
  sim->add_option("--n", sim_n, "rows");
  sim->add_option("--p", sim_p, "features");
  sim->add_option("--rho", sim_rho, "compound correlation");
  sim->add_option("--snr", sim_snr, "signal-to-noise (s1/s2)");
  sim->add_option("--xi", sim_xi, "active fraction (s3)");
  sim->add_option("--target-prob", sim_target, "marginal P(y=1) (s3)");
  sim->add_option("--seed", sim_seed, "generator seed");
  sim->add_option("--out", sim_out, "output CSV");

  std::string bench_scenario = "s1";
  int bench_reps = 10;
  std::string bench_deltas = "0.01,0.1,0.5,1,2";
  Eigen::Index bench_n = 100, bench_p = 1000;
  double bench_rho = 0.5, bench_xi = 0.3, bench_lambda2 = 0.0;
  int bench_n_lambda = 100, bench_folds = 10, bench_threads = 1;
  std::uint64_t bench_seed = 1;
  bool bench_verify = false;
  std::string bench_engine = "irls";
  std::string bench_out;
  CLI::App* bench = app.add_subcommand("bench", "timing / accuracy harness");
  bench->add_option("--scenario", bench_scenario, "s1 | s2 | s3");
  bench->add_option("--reps", bench_reps, "replications");
  bench->add_option("--deltas", bench_deltas, "comma list of smoothing widths");
  bench->add_option("--n", bench_n, "rows");
  bench->add_option("--p", bench_p, "features");
  bench->add_option("--rho", bench_rho, "compound correlation");
  bench->add_option("--xi", bench_xi, "active fraction (s3)");
  bench->add_option("--lambda2", bench_lambda2, "ridge level");
  bench->add_option("--n-lambda", bench_n_lambda, "grid size");
  bench->add_option("--folds", bench_folds, "CV folds (s3)");
  bench->add_option("--seed", bench_seed, "replication seed");
  bench->add_option("--threads", bench_threads, "parallel replications (s3)");
  bench->add_option("--engine", bench_engine, "engine for s3 runs");
  bench->add_flag("--verify", bench_verify, "run the oracle cross-checks instead");
  bench->add_option("--out", bench_out, "output CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(fit)) return cmd_fit(fit_flags, fit_lambda1, fit_out);
    if (app.got_subcommand(path_cmd)) {
      return cmd_path(path_flags, path_n_lambda, path_ratio, path_out);
    }
    if (app.got_subcommand(cv)) {
      return cmd_cv(cv_flags, cv_n_lambda, cv_ratio, cv_folds, cv_seed, cv_threads,
                    cv_lambda2_grid, cv_table, cv_model);
    }
    if (app.got_subcommand(sim)) {
      return cmd_simulate(sim_scenario, sim_n, sim_p, sim_rho, sim_snr, sim_xi, sim_target,
                          sim_seed, sim_out);
    }
    if (app.got_subcommand(bench)) {
      return cmd_bench(bench_scenario, bench_reps, bench_deltas, bench_n, bench_p, bench_rho,
                       bench_xi, bench_lambda2, bench_n_lambda, bench_folds, bench_seed,
                       bench_threads, bench_verify, bench_engine, bench_out);
    }
  } catch (const csv_error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const all_constant_error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
