#include <doctest.h>

#include <cmath>
#include <vector>

#include "bernsvm/lla.hpp"
#include "bernsvm/path.hpp"
#include "helpers.hpp"

using namespace bernsvm;
using testutil::small_instance;

TEST_CASE("lla preconditions") {
  const Dataset data = small_instance(51, 30, 5);
  const StandardizedDesign design = standardize(data);
  const LossSpec loss(1.0);
  SolverOptions opts;
  CHECK_THROWS_AS(
      lla_fit(design, data.y, loss, PenaltySpec::elastic_net(0.1, 0.0), opts, Engine::IRLS),
      std::invalid_argument);
  CHECK_THROWS_AS(
      lla_fit(design, data.y, loss, PenaltySpec::scad(0.0, 0.0), opts, Engine::IRLS),
      std::invalid_argument);
}

TEST_CASE("full shrinkage is an lla fixed point") {
  const Dataset data = small_instance(52, 30, 6);
  const StandardizedDesign design = standardize(data);
  const LossSpec loss(1.0);
  SolverOptions opts;
  std::vector<LlaState> trace;
  const ModelFit fit = lla_fit(design, data.y, loss, PenaltySpec::scad(30.0, 0.0), opts,
                               Engine::IRLS, 5, &trace);
  CHECK(fit.nonzero_count() == 0);
  REQUIRE(trace.size() == 1);  // initializer only; weights never move off ones
  CHECK(trace[0].weights == Eigen::VectorXd::Ones(6));
}

TEST_CASE("weights stay in [0,1] and the nonconvex objective descends") {
  for (const bool use_scad : {true, false}) {
    const Dataset data = random_instance(use_scad ? 53 : 54, 60, 10, 0.2);
    const StandardizedDesign design = standardize(data);
    const LossSpec loss(2.0);
    const PenaltySpec penalty =
        use_scad ? PenaltySpec::scad(0.03, 0.0) : PenaltySpec::mcp(0.03, 0.0);
    SolverOptions opts;
    std::vector<LlaState> trace;
    const ModelFit fit =
        lla_fit(design, data.y, loss, penalty, opts, Engine::IRLS, 5, &trace);
    REQUIRE(!trace.empty());
    double prev = std::numeric_limits<double>::infinity();
    for (const LlaState& state : trace) {
      for (Eigen::Index j = 0; j < state.weights.size(); ++j) {
        CHECK(state.weights[j] >= 0.0);
        CHECK(state.weights[j] <= 1.0);
      }
      const double obj = objective_value(design, data.y, state.fit.beta0, state.fit.beta,
                                         loss, penalty);
      CHECK(obj <= prev + 1e-10);
      prev = obj;
    }
    // Recorded objective is the nonconvex one, recomputed from scratch.
    CHECK(std::fabs(fit.objective -
                    objective_value(design, data.y, fit.beta0, fit.beta, loss, penalty)) <=
          1e-12 * std::max(1.0, std::fabs(fit.objective)));
    // Not worse than the initializing lasso fit under the same penalty.
    const double init_obj = objective_value(design, data.y, trace[0].fit.beta0,
                                            trace[0].fit.beta, loss, penalty);
    CHECK(fit.objective <= init_obj + 1e-10);
  }
}

TEST_CASE("flat-tail coefficients get zero weights and a ridge-style refit") {
  // lambda1 small enough that |beta| clears a * lambda1 for the signal
  // coordinates after the lasso initializer.
  const Dataset data = random_instance(55, 80, 4, 0.0, 0.3);
  const StandardizedDesign design = standardize(data);
  const LossSpec loss(0.5);
  const PenaltySpec penalty = PenaltySpec::mcp(0.005, 0.0, 1.5);
  SolverOptions opts;
  std::vector<LlaState> trace;
  lla_fit(design, data.y, loss, penalty, opts, Engine::GCD, 5, &trace);
  REQUIRE(trace.size() >= 2);
  const LlaState& last = trace.back();
  bool saw_zero_weight = false;
  for (Eigen::Index j = 0; j < last.weights.size(); ++j) {
    if (last.weights[j] == 0.0) saw_zero_weight = true;
  }
  CHECK(saw_zero_weight);
}

TEST_CASE("engine non-convergence propagates") {
  const Dataset data = small_instance(56, 30, 5);
  const StandardizedDesign design = standardize(data);
  const LossSpec loss(0.5);
  SolverOptions opts;
  opts.max_passes = 1;
  opts.tol = 1e-15;
  const ModelFit fit =
      lla_fit(design, data.y, loss, PenaltySpec::scad(0.05, 0.0), opts, Engine::GCD);
  CHECK(!fit.converged);
}

TEST_CASE("scad and mcp run through the path driver") {
  const Dataset data = random_instance(57, 50, 8, 0.1);
  const StandardizedDesign design = standardize(data);
  const LossSpec loss(1.0);
  const PenaltySpec penalty = PenaltySpec::scad(0.0, 0.0);
  SolverOptions opts;
  const LambdaGrid grid = lambda_grid(design, data.y, loss, penalty, 5, 0.1);
  const PathResult path =
      fit_path(design, data.y, loss, penalty, grid.values, Engine::IRLS, opts);
  REQUIRE(path.fits.size() == 5);
  CHECK(path.fits[0].nonzero_count() == 0);  // lasso init at lambda_max stays null
  for (const ModelFit& fit : path.fits) {
    CHECK(fit.penalty.family() == PenaltyFamily::SCADEN);
  }
}
