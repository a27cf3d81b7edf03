#include "bernsvm/simdata.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "bernsvm/csv.hpp"
#include "bernsvm/rng.hpp"

namespace bernsvm {

Scenario scenario_from_name(const std::string& name) {
  if (name == "s1") return Scenario::S1;
  if (name == "s2") return Scenario::S2;
  if (name == "s3") return Scenario::S3;
  throw std::invalid_argument("unknown scenario: " + name);
}

const char* scenario_name(Scenario s) {
  switch (s) {
    case Scenario::S1: return "s1";
    case Scenario::S2: return "s2";
    case Scenario::S3: return "s3";
  }
  return "?";
}

double compound_quadratic(const Eigen::VectorXd& beta, double rho) {
  const double sum = beta.sum();
  return (1.0 - rho) * beta.squaredNorm() + rho * sum * sum;
}

namespace {

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

Eigen::VectorXd coefficients_s1(Eigen::Index p) {
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
  for (Eigen::Index j = 1; j <= std::min<Eigen::Index>(50, p); ++j) {
    const double sign = (j % 2 == 1) ? -1.0 : 1.0;
    beta[j - 1] = sign * std::exp(-(2.0 * static_cast<double>(j) - 1.0) / 20.0);
  }
  return beta;
}

Eigen::VectorXd coefficients_s2(Eigen::Index p, Rng& rng) {
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
  for (Eigen::Index j = 1; j <= std::min<Eigen::Index>(25, p); ++j) {
    beta[j - 1] = rng.uniform(0.9, 1.1);
  }
  for (Eigen::Index j = 51; j <= std::min<Eigen::Index>(75, p); ++j) {
    beta[j - 1] = -1.0;
  }
  return beta;
}

Eigen::VectorXd coefficients_s3(Eigen::Index p, double xi, Rng& rng) {
  const auto s = static_cast<Eigen::Index>(std::floor(static_cast<double>(p) * xi));
  if (s < 1) {
    throw std::invalid_argument("scenario 3: floor(p * xi) must be at least 1");
  }
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
  for (Eigen::Index j = 0; j < s; ++j) {
    const double sign = rng.bernoulli(0.3) ? -1.0 : 1.0;
    beta[j] = sign * rng.uniform(0.0, 0.5);
  }
  return beta;
}

// Marginal P(y = +1) as a function of the intercept, estimated on a fixed set
// of draws of the score x_S' beta_S ~ N(0, tau^2); monotone in b0, so plain
// bisection applies.
double calibrate_intercept(double tau, double target, Rng& rng) {
  constexpr int kDraws = 100000;
  Eigen::VectorXd score(kDraws);
  for (int k = 0; k < kDraws; ++k) score[k] = tau * rng.normal();
  const auto marginal = [&](double b0) {
    double acc = 0.0;
    for (int k = 0; k < kDraws; ++k) acc += sigmoid(b0 + score[k]);
    return acc / kDraws;
  };
  double lo = -30.0, hi = 30.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (marginal(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-9) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

SimulatedData generate(const ScenarioConfig& config) {
  if (config.n < 1 || config.p < 1) {
    throw std::invalid_argument("generate: n and p must be positive");
  }
  if (!(config.rho >= 0.0 && config.rho < 1.0)) {
    throw std::invalid_argument("generate: rho must lie in [0, 1)");
  }
  if (config.scenario != Scenario::S3 && !(config.snr > 0.0)) {
    throw std::invalid_argument("generate: snr must be positive");
  }
  if (config.scenario == Scenario::S3 &&
      !(config.target_prob > 0.0 && config.target_prob < 1.0)) {
    throw std::invalid_argument("generate: target_prob must lie in (0, 1)");
  }

  Rng rng(config.seed);
  SimulatedData sim;

  switch (config.scenario) {
    case Scenario::S1: sim.beta_true = coefficients_s1(config.p); break;
    case Scenario::S2: sim.beta_true = coefficients_s2(config.p, rng); break;
    case Scenario::S3: sim.beta_true = coefficients_s3(config.p, config.xi, rng); break;
  }
  for (Eigen::Index j = 0; j < config.p; ++j) {
    if (sim.beta_true[j] != 0.0) sim.active_set.push_back(j);
  }

  if (config.scenario == Scenario::S3) {
    const double tau = std::sqrt(compound_quadratic(sim.beta_true, config.rho));
    sim.beta0_true = calibrate_intercept(tau, config.target_prob, rng);
  }

  const double sqrt_rho = std::sqrt(config.rho);
  const double sqrt_comp = std::sqrt(1.0 - config.rho);
  Eigen::MatrixXd x(config.n, config.p);
  for (Eigen::Index i = 0; i < config.n; ++i) {
    const double g = rng.normal();
    for (Eigen::Index j = 0; j < config.p; ++j) {
      x(i, j) = sqrt_rho * g + sqrt_comp * rng.normal();
    }
  }

  Eigen::VectorXd score = x * sim.beta_true;
  if (config.scenario != Scenario::S3) {
    const double sigma =
        std::sqrt(compound_quadratic(sim.beta_true, config.rho) / config.snr);
    for (Eigen::Index i = 0; i < config.n; ++i) score[i] += sigma * rng.normal();
  } else {
    score.array() += sim.beta0_true;
  }

  Eigen::VectorXd y(config.n);
  for (Eigen::Index i = 0; i < config.n; ++i) {
    y[i] = rng.bernoulli(sigmoid(score[i])) ? 1.0 : -1.0;
  }

  sim.data.x = std::move(x);
  sim.data.y = std::move(y);
  return sim;
}

void write_simulated(const std::string& csv_path, const std::string& truth_path,
                     const SimulatedData& sim, const ScenarioConfig& config) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(sim.data.p()));
  for (Eigen::Index j = 0; j < sim.data.p(); ++j) {
    names.push_back("x" + std::to_string(j + 1));
  }
  write_csv(csv_path, sim.data, names, "y");

  nlohmann::json truth;
  truth["scenario"] = scenario_name(config.scenario);
  truth["seed"] = config.seed;
  truth["n"] = sim.data.n();
  truth["p"] = sim.data.p();
  truth["rho"] = config.rho;
  if (config.scenario == Scenario::S3) {
    truth["xi"] = config.xi;
    truth["target_prob"] = config.target_prob;
  } else {
    truth["snr"] = config.snr;
  }
  truth["beta0_true"] = sim.beta0_true;
  truth["beta_true"] = std::vector<double>(sim.beta_true.data(),
                                           sim.beta_true.data() + sim.beta_true.size());
  truth["active_set"] = sim.active_set;

  std::ofstream out(truth_path);
  if (!out) {
    throw std::runtime_error("cannot write '" + truth_path + "'");
  }
  out << truth.dump(2) << '\n';
}

}  // namespace bernsvm
