#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "bernsvm/csv.hpp"
#include "bernsvm/rng.hpp"
#include "bernsvm/simdata.hpp"

using namespace bernsvm;

TEST_CASE("normal quantile sanity") {
  CHECK(Rng::normal_quantile(0.5) == 0.0);
  CHECK(Rng::normal_quantile(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-12));
  CHECK(Rng::normal_quantile(0.025) == doctest::Approx(-1.959963984540054).epsilon(1e-12));
  CHECK(Rng::normal_quantile(1e-10) == doctest::Approx(-6.361340902404056).epsilon(1e-9));
  CHECK_THROWS_AS(Rng::normal_quantile(0.0), std::invalid_argument);
}

TEST_CASE("scenario 1 coefficients") {
  ScenarioConfig config;
  config.scenario = Scenario::S1;
  config.n = 20;
  config.p = 60;
  config.seed = 2;
  const SimulatedData sim = generate(config);
  CHECK(sim.beta_true[0] == doctest::Approx(-std::exp(-1.0 / 20.0)).epsilon(1e-14));
  CHECK(sim.beta_true[0] == doctest::Approx(-0.951229).epsilon(1e-6));
  CHECK(sim.beta_true[1] == doctest::Approx(std::exp(-3.0 / 20.0)).epsilon(1e-14));
  CHECK(sim.beta_true[50] == 0.0);
  CHECK(sim.active_set.size() == 50);
  CHECK(sim.beta0_true == 0.0);
}

TEST_CASE("scenario 2 coefficients") {
  ScenarioConfig config;
  config.scenario = Scenario::S2;
  config.n = 20;
  config.p = 100;
  config.seed = 3;
  const SimulatedData sim = generate(config);
  for (Eigen::Index j = 0; j < 25; ++j) {
    CHECK(sim.beta_true[j] >= 0.9);
    CHECK(sim.beta_true[j] <= 1.1);
  }
  for (Eigen::Index j = 25; j < 50; ++j) CHECK(sim.beta_true[j] == 0.0);
  for (Eigen::Index j = 50; j < 75; ++j) CHECK(sim.beta_true[j] == -1.0);
  for (Eigen::Index j = 75; j < 100; ++j) CHECK(sim.beta_true[j] == 0.0);
  CHECK(sim.active_set.size() == 50);
}

TEST_CASE("scenario 3 support size and coefficient range") {
  ScenarioConfig config;
  config.scenario = Scenario::S3;
  config.n = 25;
  config.p = 40;
  config.xi = 0.3;
  config.rho = 0.5;
  config.seed = 4;
  const SimulatedData sim = generate(config);
  CHECK(sim.active_set.size() == 12);  // floor(40 * 0.3)
  for (const Eigen::Index j : sim.active_set) {
    CHECK(j < 12);
    CHECK(std::fabs(sim.beta_true[j]) > 0.0);
    CHECK(std::fabs(sim.beta_true[j]) <= 0.5);
  }
}

TEST_CASE("compound quadratic matches the dense form") {
  Rng rng(6);
  for (int k = 0; k < 20; ++k) {
    const Eigen::Index p = 4 + static_cast<Eigen::Index>(rng.below(5));
    Eigen::VectorXd beta(p);
    for (Eigen::Index j = 0; j < p; ++j) beta[j] = rng.uniform(-2.0, 2.0);
    const double rho = rng.uniform(0.0, 0.95);
    Eigen::MatrixXd sigma = Eigen::MatrixXd::Constant(p, p, rho);
    sigma.diagonal().setOnes();
    CHECK(compound_quadratic(beta, rho) ==
          doctest::Approx(beta.dot(sigma * beta)).epsilon(1e-12));
  }
}

TEST_CASE("column marginals and correlation approach the targets") {
  ScenarioConfig config;
  config.scenario = Scenario::S1;
  config.n = 10000;
  config.p = 4;
  config.rho = 0.0;
  config.seed = 7;
  const SimulatedData sim = generate(config);
  const double band = 5.0 / std::sqrt(static_cast<double>(config.n));
  for (Eigen::Index j = 0; j < config.p; ++j) {
    const auto col = sim.data.x.col(j);
    const double mean = col.mean();
    const double var = (col.array() - mean).square().mean();
    CHECK(std::fabs(mean) <= band);
    CHECK(std::fabs(var - 1.0) <= 3.0 * band);
  }
  auto sample_corr = [&](const Eigen::MatrixXd& x, Eigen::Index a, Eigen::Index b) {
    const auto ca = x.col(a).array() - x.col(a).mean();
    const auto cb = x.col(b).array() - x.col(b).mean();
    return (ca * cb).mean() / std::sqrt(ca.square().mean() * cb.square().mean());
  };
  CHECK(std::fabs(sample_corr(sim.data.x, 0, 1)) < 0.1);

  config.rho = 0.5;
  config.seed = 8;
  const SimulatedData corr = generate(config);
  for (Eigen::Index a = 0; a < 3; ++a) {
    CHECK(std::fabs(sample_corr(corr.data.x, a, a + 1) - 0.5) <= band);
  }
}

TEST_CASE("scenario 3 marginal probability calibration") {
  ScenarioConfig config;
  config.scenario = Scenario::S3;
  config.n = 50;
  config.p = 800;
  config.xi = 0.3;
  config.rho = 0.8;
  config.seed = 11;
  const SimulatedData sim = generate(config);
  const double tau = std::sqrt(compound_quadratic(sim.beta_true, config.rho));
  Rng rng(12345);
  double acc = 0.0;
  constexpr int kDraws = 1000000;
  for (int k = 0; k < kDraws; ++k) {
    acc += 1.0 / (1.0 + std::exp(-(sim.beta0_true + tau * rng.normal())));
  }
  CHECK(std::fabs(acc / kDraws - 0.3) <= 0.005);
}

TEST_CASE("identical seeds reproduce identical bits") {
  ScenarioConfig config;
  config.scenario = Scenario::S3;
  config.n = 30;
  config.p = 20;
  config.xi = 0.2;
  config.seed = 13;
  const SimulatedData a = generate(config);
  const SimulatedData b = generate(config);
  CHECK(a.data.x == b.data.x);
  CHECK(a.data.y == b.data.y);
  CHECK(a.beta_true == b.beta_true);
  CHECK(a.beta0_true == b.beta0_true);
  config.seed = 14;
  const SimulatedData c = generate(config);
  CHECK(a.data.x != c.data.x);
}

TEST_CASE("config validation") {
  ScenarioConfig config;
  config.scenario = Scenario::S1;
  config.rho = 1.0;
  CHECK_THROWS_AS(generate(config), std::invalid_argument);
  config.rho = -0.1;
  CHECK_THROWS_AS(generate(config), std::invalid_argument);
  config.rho = 0.5;
  config.snr = 0.0;
  CHECK_THROWS_AS(generate(config), std::invalid_argument);
}

TEST_CASE("simulated files round trip through the loader") {
  ScenarioConfig config;
  config.scenario = Scenario::S2;
  config.n = 15;
  config.p = 80;
  config.seed = 19;
  const SimulatedData sim = generate(config);
  write_simulated("test_sim_tmp.csv", "test_sim_tmp.truth.json", sim, config);
  const LoadedCsv loaded = load_csv("test_sim_tmp.csv", "y");
  CHECK(loaded.data.x == sim.data.x);
  CHECK(loaded.data.y == sim.data.y);
  CHECK(loaded.feature_names[0] == "x1");

  std::ifstream in("test_sim_tmp.truth.json");
  nlohmann::json truth;
  in >> truth;
  CHECK(truth["scenario"] == "s2");
  const auto beta = truth["beta_true"].get<std::vector<double>>();
  REQUIRE(static_cast<Eigen::Index>(beta.size()) == sim.beta_true.size());
  for (Eigen::Index j = 0; j < sim.beta_true.size(); ++j) {
    CHECK(beta[static_cast<std::size_t>(j)] == sim.beta_true[j]);
  }
  std::remove("test_sim_tmp.csv");
  std::remove("test_sim_tmp.truth.json");
}
