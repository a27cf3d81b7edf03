#include "bernsvm/cv.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "bernsvm/metrics.hpp"
#include "bernsvm/rng.hpp"

namespace bernsvm {

std::vector<int> stratified_folds(const Eigen::VectorXd& y, int folds, std::uint64_t seed) {
  if (folds < 2) {
    throw std::invalid_argument("stratified_folds: need at least 2 folds");
  }
  if (static_cast<Eigen::Index>(folds) > y.size()) {
    throw std::invalid_argument("stratified_folds: more folds than rows");
  }
  std::vector<int> assignment(static_cast<std::size_t>(y.size()), -1);
  Rng rng(seed);
  // The dealing counter runs across classes so no fold is left empty even
  // when folds exceed a class count (leave-one-out included).
  std::size_t dealt = 0;
  for (const double cls : {1.0, -1.0}) {
    std::vector<Eigen::Index> rows;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
      if (y[i] == cls) rows.push_back(i);
    }
    rng.shuffle(rows);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      assignment[static_cast<std::size_t>(rows[k])] =
          static_cast<int>((dealt + k) % static_cast<std::size_t>(folds));
    }
    dealt += rows.size();
  }
  return assignment;
}

namespace {

struct FoldSplit {
  Dataset train;
  Eigen::MatrixXd test_x;
  Eigen::VectorXd test_y;
};

FoldSplit split_fold(const Dataset& data, const std::vector<int>& assignment, int fold) {
  std::vector<Eigen::Index> train_rows, test_rows;
  for (Eigen::Index i = 0; i < data.n(); ++i) {
    (assignment[static_cast<std::size_t>(i)] == fold ? test_rows : train_rows).push_back(i);
  }
  FoldSplit split;
  split.train.x.resize(static_cast<Eigen::Index>(train_rows.size()), data.p());
  split.train.y.resize(static_cast<Eigen::Index>(train_rows.size()));
  for (std::size_t k = 0; k < train_rows.size(); ++k) {
    split.train.x.row(static_cast<Eigen::Index>(k)) = data.x.row(train_rows[k]);
    split.train.y[static_cast<Eigen::Index>(k)] = data.y[train_rows[k]];
  }
  split.test_x.resize(static_cast<Eigen::Index>(test_rows.size()), data.p());
  split.test_y.resize(static_cast<Eigen::Index>(test_rows.size()));
  for (std::size_t k = 0; k < test_rows.size(); ++k) {
    split.test_x.row(static_cast<Eigen::Index>(k)) = data.x.row(test_rows[k]);
    split.test_y[static_cast<Eigen::Index>(k)] = data.y[test_rows[k]];
  }
  return split;
}

}  // namespace

CvResult cross_validate(const Dataset& data, const LossSpec& loss, const PenaltySpec& penalty,
                        const LambdaGrid& grid, int folds, std::uint64_t seed, Engine engine,
                        const SolverOptions& opts, CvMetric metric, int threads) {
  (void)metric;  // MR is the only metric
  require_two_classes(data.y);
  const std::vector<int> assignment = stratified_folds(data.y, folds, seed);

  // Stratified dealing puts every class with >= 2 rows into >= 2 folds, so a
  // one-class training split can only come from a singleton class; no
  // re-draw can fix that.
  for (int f = 0; f < folds; ++f) {
    bool pos = false, neg = false;
    for (Eigen::Index i = 0; i < data.n(); ++i) {
      if (assignment[static_cast<std::size_t>(i)] == f) continue;
      pos = pos || data.y[i] > 0;
      neg = neg || data.y[i] < 0;
    }
    if (!pos || !neg) {
      throw std::runtime_error(
          "cross_validate: a training split has a single class and no stratification can "
          "avoid it");
    }
  }

  const Eigen::Index n_lambda = grid.values.size();
  Eigen::MatrixXd fold_metric(folds, n_lambda);

  auto run_fold = [&](int f) {
    const FoldSplit split = split_fold(data, assignment, f);
    const StandardizedDesign design = standardize(split.train);
    const PathResult path = fit_path(design, split.train.y, loss, penalty, grid.values, engine, opts);
    for (Eigen::Index k = 0; k < n_lambda; ++k) {
      const auto [b0, beta] =
          destandardize_coefficients(path.fits[static_cast<std::size_t>(k)].beta0,
                                     path.fits[static_cast<std::size_t>(k)].beta, design);
      const Eigen::VectorXd pred = predict(b0, beta, split.test_x);
      fold_metric(f, k) = classification_report(split.test_y, pred).mr;
    }
  };

  if (threads <= 1) {
    for (int f = 0; f < folds; ++f) run_fold(f);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    const int workers = std::min(threads, folds);
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&]() {
        while (true) {
          const int f = next.fetch_add(1);
          if (f >= folds) break;
          run_fold(f);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  CvResult out;
  out.lambdas = grid.values;
  out.folds = folds;
  out.seed = seed;
  out.mean_metric = fold_metric.colwise().mean();
  out.sd_metric.resize(n_lambda);
  for (Eigen::Index k = 0; k < n_lambda; ++k) {
    const double mean = out.mean_metric[k];
    double ss = 0.0;
    for (int f = 0; f < folds; ++f) {
      const double d = fold_metric(f, k) - mean;
      ss += d * d;
    }
    out.sd_metric[k] = std::sqrt(ss / static_cast<double>(folds - 1));
  }

  Eigen::Index k_min = 0;
  for (Eigen::Index k = 1; k < n_lambda; ++k) {
    if (out.mean_metric[k] < out.mean_metric[k_min]) k_min = k;
  }
  out.lambda_min = out.lambdas[k_min];
  const double threshold = out.mean_metric[k_min] + out.sd_metric[k_min];
  for (Eigen::Index k = 0; k < n_lambda; ++k) {
    if (out.mean_metric[k] <= threshold) {
      out.lambda_1se = out.lambdas[k];
      break;
    }
  }
  return out;
}

Cv2dResult cross_validate_2d(const Dataset& data, const LossSpec& loss,
                             const PenaltySpec& penalty,
                             const std::vector<double>& lambda2_values, const LambdaGrid& grid,
                             int folds, std::uint64_t seed, Engine engine,
                             const SolverOptions& opts, CvMetric metric, int threads) {
  if (lambda2_values.empty()) {
    throw std::invalid_argument("cross_validate_2d: need at least one lambda2 value");
  }
  if (!penalty.is_convex()) {
    throw std::invalid_argument("cross_validate_2d: convex penalties only");
  }
  Cv2dResult out;
  out.lambda2_values = lambda2_values;
  out.best_mean_metric = std::numeric_limits<double>::infinity();
  for (const double l2 : lambda2_values) {
    if (!(std::isfinite(l2) && l2 >= 0.0)) {
      throw std::invalid_argument("cross_validate_2d: lambda2 values must be >= 0");
    }
    PenaltySpec pen2 =
        penalty.has_weights()
            ? PenaltySpec::adaptive(penalty.lambda1(), l2, penalty.weights())
            : PenaltySpec::elastic_net(penalty.lambda1(), l2);
    const CvResult cv =
        cross_validate(data, loss, pen2, grid, folds, seed, engine, opts, metric, threads);
    Eigen::Index k_min = 0;
    for (Eigen::Index k = 1; k < cv.lambdas.size(); ++k) {
      if (cv.mean_metric[k] < cv.mean_metric[k_min]) k_min = k;
    }
    if (cv.mean_metric[k_min] < out.best_mean_metric) {
      out.best_mean_metric = cv.mean_metric[k_min];
      out.lambda2_min = l2;
      out.lambda1_min = cv.lambda_min;
    }
    out.per_lambda2.push_back(cv);
  }
  return out;
}

}  // namespace bernsvm
