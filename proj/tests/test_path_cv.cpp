#include <doctest.h>

#include <cmath>
#include <cstring>
#include <set>

#include "bernsvm/cv.hpp"
#include "bernsvm/gcd.hpp"
#include "bernsvm/irls.hpp"
#include "bernsvm/path.hpp"
#include "helpers.hpp"

using namespace bernsvm;
using testutil::rel_gap;
using testutil::small_instance;

TEST_CASE("the null model is exact at lambda_max") {
  const Dataset data = random_instance(61, 50, 12, 0.3);
  const StandardizedDesign design = standardize(data);
  const PenaltySpec penalty = PenaltySpec::elastic_net(0.0, 0.0);
  for (const double delta : {0.5, 2.0}) {
    const LossSpec loss(delta);
    const LambdaGrid grid = lambda_grid(design, data.y, loss, penalty, 8, 0.1);
    for (const Engine engine : {Engine::GCD, Engine::IRLS}) {
      const PathResult path =
          fit_path(design, data.y, loss, penalty, grid.values, engine, {});
      CHECK(path.fits[0].nonzero_count() == 0);
      CHECK(path.fits[0].beta == Eigen::VectorXd::Zero(12));
    }
  }
}

TEST_CASE("grid endpoints and validation") {
  const Dataset data = small_instance(62, 20, 4);
  const StandardizedDesign design = standardize(data);
  const LossSpec loss(1.0);
  const PenaltySpec penalty = PenaltySpec::elastic_net(0.0, 0.0);
  const LambdaGrid grid = lambda_grid(design, data.y, loss, penalty, 2, 0.5);
  REQUIRE(grid.values.size() == 2);
  CHECK(grid.values[1] == doctest::Approx(0.5 * grid.values[0]).epsilon(1e-14));
  CHECK_THROWS_AS(lambda_grid(design, data.y, loss, penalty, 1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(lambda_grid(design, data.y, loss, penalty, 5, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(lambda_grid(design, data.y, loss, penalty, 5, 0.0), std::invalid_argument);
  CHECK(default_lambda_ratio(100, 1000) == 1e-2);
  CHECK(default_lambda_ratio(1000, 100) == 1e-4);
}

TEST_CASE("hand-computed lambda_max on a balanced toy") {
  // One informative standardized column, one orthogonal noise column; the
  // intercept-only optimum is 0, so lambda_max is the plain correlation.
  Eigen::MatrixXd x(4, 2);
  x << 1, 1, 1, -1, -1, 1, -1, -1;
  Eigen::VectorXd y(4);
  y << 1, 1, -1, -1;
  const StandardizedDesign design = standardize(make_dataset(x, y));
  const LossSpec loss(0.5);
  const LambdaGrid grid =
      lambda_grid(design, y, loss, PenaltySpec::elastic_net(0.0, 0.0), 3, 0.1);
  CHECK(std::fabs(grid.null_intercept) <= 1e-12);
  CHECK(grid.values[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("single-lambda path equals a direct warm-started fit") {
  const Dataset data = small_instance(63, 30, 6);
  const StandardizedDesign design = standardize(data);
  const LossSpec loss(1.0);
  const PenaltySpec penalty = PenaltySpec::elastic_net(0.0, 0.01);
  Eigen::VectorXd lambdas(1);
  lambdas << 0.05;
  const PathResult path = fit_path(design, data.y, loss, penalty, lambdas, Engine::GCD, {});
  WarmStart warm{null_intercept(data.y, loss), Eigen::VectorXd::Zero(6)};
  const ModelFit direct =
      gcd_fit(design, data.y, loss, penalty.with_lambda1(0.05), {}, &warm);
  CHECK(path.fits[0].beta == direct.beta);
  CHECK(path.fits[0].beta0 == direct.beta0);
}

TEST_CASE("warm and cold paths meet the same objectives") {
  const Dataset data = random_instance(64, 40, 10, 0.2);
  const StandardizedDesign design = standardize(data);
  const LossSpec loss(2.0);
  const PenaltySpec penalty = PenaltySpec::elastic_net(0.0, 0.0);
  const LambdaGrid grid = lambda_grid(design, data.y, loss, penalty, 12, 0.05);
  const PathResult path = fit_path(design, data.y, loss, penalty, grid.values, Engine::GCD, {});
  for (Eigen::Index k = 0; k < grid.values.size(); ++k) {
    const ModelFit cold = gcd_fit(design, data.y, loss, penalty.with_lambda1(grid.values[k]));
    CHECK(rel_gap(cold.objective, path.fits[static_cast<std::size_t>(k)].objective) <= 1e-8);
  }
  for (std::size_t k = 0; k < path.fits.size(); ++k) {
    CHECK(path.nonzero_counts[k] == static_cast<int>(path.fits[k].nonzero_count()));
  }
  Eigen::VectorXd increasing(2);
  increasing << 0.1, 0.2;
  CHECK_THROWS_AS(fit_path(design, data.y, loss, penalty, increasing, Engine::GCD, {}),
                  std::invalid_argument);
}

TEST_CASE("stratified folds partition each class evenly") {
  Eigen::VectorXd y(11);
  y << 1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1;
  const std::vector<int> folds = stratified_folds(y, 3, 99);
  REQUIRE(folds.size() == 11);
  std::vector<int> pos_count(3, 0), neg_count(3, 0);
  for (std::size_t i = 0; i < folds.size(); ++i) {
    REQUIRE(folds[i] >= 0);
    REQUIRE(folds[i] < 3);
    (y[static_cast<Eigen::Index>(i)] > 0 ? pos_count : neg_count)[folds[i]] += 1;
  }
  for (int f = 0; f < 3; ++f) {
    CHECK(pos_count[f] >= 2);
    CHECK(pos_count[f] <= 3);
    CHECK(neg_count[f] >= 1);
    CHECK(neg_count[f] <= 2);
  }
  CHECK(stratified_folds(y, 3, 99) == folds);  // deterministic
  CHECK(stratified_folds(y, 3, 100) != folds);
  CHECK_THROWS_AS(stratified_folds(y, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(stratified_folds(y, 12, 0), std::invalid_argument);
}

TEST_CASE("leave-one-out on a separable toy reaches zero error") {
  Eigen::MatrixXd x(6, 1);
  x << -3, -2, -1, 1, 2, 3;
  Eigen::VectorXd y(6);
  y << -1, -1, -1, 1, 1, 1;
  const Dataset data = make_dataset(x, y);
  const LossSpec loss(0.5);
  const PenaltySpec penalty = PenaltySpec::elastic_net(0.0, 0.0);
  const StandardizedDesign design = standardize(data);
  const LambdaGrid grid = lambda_grid(design, y, loss, penalty, 20, 0.001);
  const CvResult cv = cross_validate(data, loss, penalty, grid, 6, 7, Engine::GCD);
  Eigen::Index k_min = 0;
  for (Eigen::Index k = 0; k < cv.lambdas.size(); ++k) {
    if (cv.lambdas[k] == cv.lambda_min) k_min = k;
  }
  CHECK(cv.mean_metric[k_min] == 0.0);
  CHECK(cv.lambda_1se >= cv.lambda_min);
}

TEST_CASE("duplicated rows across folds give zero fold variance") {
  Eigen::MatrixXd x(10, 2);
  Eigen::VectorXd y(10);
  for (Eigen::Index i = 0; i < 5; ++i) {
    x.row(i) << 1.0, 2.0;
    y[i] = 1.0;
    x.row(5 + i) << -1.0, 0.5;
    y[5 + i] = -1.0;
  }
  const Dataset data{x, y};
  const LossSpec loss(1.0);
  const PenaltySpec penalty = PenaltySpec::elastic_net(0.0, 0.0);
  const StandardizedDesign design = standardize(data);
  const LambdaGrid grid = lambda_grid(design, y, loss, penalty, 5, 0.1);
  const CvResult cv = cross_validate(data, loss, penalty, grid, 5, 3, Engine::IRLS);
  CHECK(cv.sd_metric.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("cross-validation is deterministic and thread-count invariant") {
  const Dataset data = random_instance(65, 40, 8, 0.2);
  const LossSpec loss(2.0);
  const PenaltySpec penalty = PenaltySpec::elastic_net(0.0, 0.1);
  const StandardizedDesign design = standardize(data);
  const LambdaGrid grid = lambda_grid(design, data.y, loss, penalty, 10, 0.05);
  const CvResult a = cross_validate(data, loss, penalty, grid, 5, 11, Engine::IRLS, {},
                                    CvMetric::MR, 1);
  const CvResult b = cross_validate(data, loss, penalty, grid, 5, 11, Engine::IRLS, {},
                                    CvMetric::MR, 1);
  const CvResult c = cross_validate(data, loss, penalty, grid, 5, 11, Engine::IRLS, {},
                                    CvMetric::MR, 4);
  CHECK(a.mean_metric == b.mean_metric);
  CHECK(a.sd_metric == b.sd_metric);
  CHECK(a.mean_metric == c.mean_metric);
  CHECK(a.sd_metric == c.sd_metric);
  CHECK(a.lambda_min == c.lambda_min);
  CHECK(a.lambda_1se == c.lambda_1se);
}

TEST_CASE("per-fold standardizers never see validation rows") {
  const Dataset data = random_instance(66, 30, 3, 0.0);
  const std::vector<int> assignment = stratified_folds(data.y, 3, 5);
  const StandardizedDesign full = standardize(data);
  for (int f = 0; f < 3; ++f) {
    std::vector<Eigen::Index> rows;
    for (Eigen::Index i = 0; i < data.n(); ++i) {
      if (assignment[static_cast<std::size_t>(i)] != f) rows.push_back(i);
    }
    Eigen::MatrixXd xt(static_cast<Eigen::Index>(rows.size()), data.p());
    Eigen::VectorXd yt(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t k = 0; k < rows.size(); ++k) {
      xt.row(static_cast<Eigen::Index>(k)) = data.x.row(rows[k]);
      yt[static_cast<Eigen::Index>(k)] = data.y[rows[k]];
    }
    const StandardizedDesign fold = standardize(Dataset{xt, yt});
    CHECK((fold.centers - full.centers).cwiseAbs().maxCoeff() > 0.0);
  }
}

TEST_CASE("two-dimensional selection picks the best ridge level") {
  const Dataset data = random_instance(67, 50, 10, 0.3);
  const LossSpec loss(1.0);
  const PenaltySpec penalty = PenaltySpec::elastic_net(0.0, 0.0);
  const StandardizedDesign design = standardize(data);
  const LambdaGrid grid = lambda_grid(design, data.y, loss, penalty, 10, 0.05);
  const std::vector<double> lambda2s{0.0, 0.05, 0.5};
  const Cv2dResult cv2 =
      cross_validate_2d(data, loss, penalty, lambda2s, grid, 5, 13, Engine::IRLS);
  REQUIRE(cv2.per_lambda2.size() == 3);
  // The winner matches an exhaustive scan of the per-level sweeps.
  double best = std::numeric_limits<double>::infinity();
  double best_l2 = -1.0;
  for (std::size_t v = 0; v < lambda2s.size(); ++v) {
    const double m = cv2.per_lambda2[v].mean_metric.minCoeff();
    if (m < best) {
      best = m;
      best_l2 = lambda2s[v];
    }
  }
  CHECK(cv2.best_mean_metric == best);
  CHECK(cv2.lambda2_min == best_l2);
  CHECK_THROWS_AS(cross_validate_2d(data, loss, PenaltySpec::scad(0.1, 0.0), lambda2s, grid,
                                    5, 13, Engine::IRLS),
                  std::invalid_argument);
  CHECK_THROWS_AS(cross_validate_2d(data, loss, penalty, {}, grid, 5, 13, Engine::IRLS),
                  std::invalid_argument);
}

TEST_CASE("a singleton class cannot be cross-validated") {
  Eigen::MatrixXd x = Eigen::MatrixXd::Random(6, 2);
  Eigen::VectorXd y(6);
  y << 1, -1, -1, -1, -1, -1;
  const Dataset data = make_dataset(x, y);
  const LossSpec loss(1.0);
  const PenaltySpec penalty = PenaltySpec::elastic_net(0.0, 0.0);
  const StandardizedDesign design = standardize(data);
  const LambdaGrid grid = lambda_grid(design, y, loss, penalty, 3, 0.1);
  CHECK_THROWS_AS(cross_validate(data, loss, penalty, grid, 3, 1, Engine::GCD),
                  std::runtime_error);
}
