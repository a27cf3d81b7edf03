#include "bernsvm/bench.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "bernsvm/gcd.hpp"
#include "bernsvm/irls.hpp"
#include "bernsvm/metrics.hpp"
#include "bernsvm/oracle.hpp"
#include "bernsvm/rng.hpp"

namespace bernsvm {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

SolverOptions bench_solver_options() {
  SolverOptions opts;
  opts.tol = 1e-4;
  return opts;
}

Dataset random_instance(std::uint64_t seed, Eigen::Index n, Eigen::Index p, double rho,
                        double noise) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(seed + 1000003 * attempt);
    const double sqrt_rho = std::sqrt(rho);
    const double sqrt_comp = std::sqrt(1.0 - rho);
    Eigen::MatrixXd x(n, p);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double g = rng.normal();
      for (Eigen::Index j = 0; j < p; ++j) {
        x(i, j) = sqrt_rho * g + sqrt_comp * rng.normal();
      }
    }
    Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
    for (Eigen::Index j = 0; j < std::min<Eigen::Index>(p, 5); ++j) {
      beta[j] = (j % 2 == 0) ? 1.0 : -1.0;
    }
    Eigen::VectorXd score = x * beta;
    for (Eigen::Index i = 0; i < n; ++i) score[i] += noise * rng.normal();
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) y[i] = score[i] >= 0.0 ? 1.0 : -1.0;
    bool pos = false, neg = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      pos = pos || y[i] > 0;
      neg = neg || y[i] < 0;
    }
    if (pos && neg) return Dataset{std::move(x), std::move(y)};
  }
}

std::vector<TimingRow> run_timing_bench(const TimingBenchConfig& config) {
  std::vector<Dataset> datasets;
  datasets.reserve(static_cast<std::size_t>(config.reps));
  for (int rep = 0; rep < config.reps; ++rep) {
    ScenarioConfig sc = config.scenario;
    sc.seed = config.scenario.seed + static_cast<std::uint64_t>(rep);
    datasets.push_back(generate(sc).data);
  }

  std::vector<TimingRow> rows;
  for (const double delta : config.deltas) {
    const LossSpec loss(delta);
    TimingRow row;
    row.delta = delta;
    for (int rep = 0; rep < config.reps; ++rep) {
      const StandardizedDesign design = standardize(datasets[static_cast<std::size_t>(rep)]);
      const Eigen::VectorXd& y = datasets[static_cast<std::size_t>(rep)].y;
      const PenaltySpec penalty = PenaltySpec::elastic_net(0.0, config.lambda2);
      const LambdaGrid grid =
          lambda_grid(design, y, loss, penalty, config.n_lambda,
                      default_lambda_ratio(design.n(), design.p()));

      auto t0 = std::chrono::steady_clock::now();
      const PathResult gcd_path =
          fit_path(design, y, loss, penalty, grid.values, Engine::GCD, config.opts);
      row.gcd_time += seconds_since(t0);

      t0 = std::chrono::steady_clock::now();
      const PathResult irls_path =
          fit_path(design, y, loss, penalty, grid.values, Engine::IRLS, config.opts);
      row.irls_time += seconds_since(t0);

      row.gcd_obj += gcd_path.fits.back().objective;
      row.irls_obj += irls_path.fits.back().objective;
      row.gcd_nnz += static_cast<double>(gcd_path.nonzero_counts.back());
      row.irls_nnz += static_cast<double>(irls_path.nonzero_counts.back());
    }
    const double inv_reps = 1.0 / static_cast<double>(config.reps);
    row.gcd_time *= inv_reps;
    row.irls_time *= inv_reps;
    row.gcd_obj *= inv_reps;
    row.irls_obj *= inv_reps;
    row.gcd_nnz *= inv_reps;
    row.irls_nnz *= inv_reps;
    rows.push_back(row);
  }
  return rows;
}

S3BenchResult run_s3_bench(const S3BenchConfig& config) {
  if (config.scenario.scenario != Scenario::S3) {
    throw std::invalid_argument("run_s3_bench: scenario must be s3");
  }
  const LossSpec loss(config.delta);
  const PenaltySpec penalty = PenaltySpec::elastic_net(0.0, config.lambda2);

  struct RepOutcome {
    double mr = 0.0, se = 0.0, sp = 0.0;
    std::optional<double> pr, rc;
  };
  std::vector<RepOutcome> outcomes(static_cast<std::size_t>(config.reps));

  auto run_rep = [&](int rep) {
    ScenarioConfig train_cfg = config.scenario;
    train_cfg.seed = config.scenario.seed + 2 * static_cast<std::uint64_t>(rep);
    const SimulatedData train = generate(train_cfg);

    ScenarioConfig test_cfg = config.scenario;
    test_cfg.n = config.n_test;
    test_cfg.seed = config.scenario.seed + 2 * static_cast<std::uint64_t>(rep) + 1;
    const SimulatedData test = generate(test_cfg);

    const StandardizedDesign design = standardize(train.data);
    const LambdaGrid grid =
        lambda_grid(design, train.data.y, loss, penalty, config.n_lambda,
                    default_lambda_ratio(design.n(), design.p()));
    const CvResult cv =
        cross_validate(train.data, loss, penalty, grid, config.folds,
                       train_cfg.seed, config.engine, config.opts);

    const PenaltySpec chosen = penalty.with_lambda1(cv.lambda_min);
    const ModelFit fit = config.engine == Engine::GCD
                             ? gcd_fit(design, train.data.y, loss, chosen, config.opts)
                             : irls_fit(design, train.data.y, loss, chosen, config.opts);
    const auto [b0, beta] = destandardize_coefficients(fit.beta0, fit.beta, design);

    RepOutcome out;
    const Eigen::VectorXd pred = predict(b0, beta, test.data.x);
    const ClassificationReport cls = classification_report(test.data.y, pred);
    out.mr = cls.mr;
    out.se = cls.se;
    out.sp = cls.sp;
    const SelectionReport sel = selection_report(train.beta_true, beta);
    out.pr = sel.pr;
    out.rc = sel.rc;
    outcomes[static_cast<std::size_t>(rep)] = out;
  };

  if (config.threads <= 1) {
    for (int rep = 0; rep < config.reps; ++rep) run_rep(rep);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    const int workers = std::min(config.threads, config.reps);
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&]() {
        while (true) {
          const int rep = next.fetch_add(1);
          if (rep >= config.reps) break;
          run_rep(rep);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  S3BenchResult result;
  result.reps = config.reps;
  double pr_sum = 0.0, rc_sum = 0.0;
  int pr_count = 0, rc_count = 0;
  for (const auto& out : outcomes) {
    result.mr += out.mr;
    result.se += out.se;
    result.sp += out.sp;
    if (out.pr) {
      pr_sum += *out.pr;
      ++pr_count;
    }
    if (out.rc) {
      rc_sum += *out.rc;
      ++rc_count;
    }
  }
  const double inv_reps = 1.0 / static_cast<double>(config.reps);
  result.mr *= inv_reps;
  result.se *= inv_reps;
  result.sp *= inv_reps;
  if (pr_count > 0) result.pr = pr_sum / pr_count;
  if (rc_count > 0) result.rc = rc_sum / rc_count;
  return result;
}

std::vector<VerifyRow> run_verification(int reps, std::uint64_t seed) {
  std::vector<VerifyRow> rows;

  // Engines against the proximal-gradient reference on one shared convex
  // objective per instance.
  double worst_gcd_gap = 0.0, worst_irls_gap = 0.0;
  for (int k = 0; k < reps; ++k) {
    const Dataset data = random_instance(seed + static_cast<std::uint64_t>(k), 20, 5);
    const StandardizedDesign design = standardize(data);
    const LossSpec loss(k % 2 == 0 ? 2.0 : 0.5);
    const PenaltySpec penalty = PenaltySpec::elastic_net(0.05, 0.01);
    SolverOptions opts;
    opts.tol = 1e-9;
    const ModelFit ref = prox_grad_fit(design, data.y, loss, penalty, 1e-11, 500000);
    const ModelFit g = gcd_fit(design, data.y, loss, penalty, opts);
    const ModelFit ir = irls_fit(design, data.y, loss, penalty, opts);
    const double scale = std::max(1.0, std::fabs(ref.objective));
    worst_gcd_gap = std::max(worst_gcd_gap, std::fabs(g.objective - ref.objective) / scale);
    worst_irls_gap = std::max(worst_irls_gap, std::fabs(ir.objective - ref.objective) / scale);
  }
  rows.push_back({"oracle_gap_gcd", worst_gcd_gap, worst_gcd_gap <= 1e-6});
  rows.push_back({"oracle_gap_irls", worst_irls_gap, worst_irls_gap <= 1e-6});

  // Hinge-LP bracket: lp_opt <= smoothed_opt <= lp_opt + delta.
  for (const double delta : {0.5, 2.0}) {
    const LossSpec loss(delta);
    double worst_lower = -1e300;  // max(lp - bern), must stay <= 0
    double worst_upper = -1e300;
    const int lp_reps = std::min(reps, 10);
    for (int k = 0; k < lp_reps; ++k) {
      const Dataset data = random_instance(seed + 777 + static_cast<std::uint64_t>(k), 20, 4);
      const StandardizedDesign design = standardize(data);
      const double lambda1 = 0.02 + 0.03 * (k % 4);
      const PenaltySpec penalty = PenaltySpec::elastic_net(lambda1, 0.0);
      SolverOptions opts;
      opts.tol = 1e-9;
      const ModelFit fit = gcd_fit(design, data.y, loss, penalty, opts);
      const HingeLpSolution lp = hinge_l1_lp(design.x_std, data.y, lambda1);
      worst_lower = std::max(worst_lower, lp.objective - fit.objective);
      worst_upper = std::max(worst_upper, fit.objective - lp.objective - delta);
    }
    const std::string tag = delta == 0.5 ? "0.5" : "2";
    rows.push_back({"lp_sandwich_lower_delta_" + tag, worst_lower, worst_lower <= 0.0});
    rows.push_back({"lp_sandwich_upper_delta_" + tag, worst_upper, worst_upper <= 1e-9});
  }
  return rows;
}

}  // namespace bernsvm
