#pragma once

#include <cstdint>
#include <vector>

#include "bernsvm/path.hpp"
#include "bernsvm/solver.hpp"

namespace bernsvm {

enum class CvMetric { MR };

struct CvResult {
  Eigen::VectorXd lambdas;
  Eigen::VectorXd mean_metric;
  Eigen::VectorXd sd_metric;  // sample standard deviation across folds
  double lambda_min = 0.0;    // largest lambda attaining the minimal mean
  double lambda_1se = 0.0;    // largest lambda with mean <= min + sd at lambda_min
  int folds = 0;
  std::uint64_t seed = 0;
};

// Stratified fold labels: rows of each class are shuffled with the seeded
// generator and dealt round-robin, so per-class fold sizes differ by at most
// one. Returns one fold index per row.
std::vector<int> stratified_folds(const Eigen::VectorXd& y, int folds, std::uint64_t seed);

// K-fold cross-validation of the misclassification rate over a shared lambda
// sequence. Each fold standardizes on its own training split, fits the path
// there, and scores the held-out rows on the raw scale. Folds may be fitted
// concurrently; results do not depend on the thread count.
CvResult cross_validate(const Dataset& data, const LossSpec& loss, const PenaltySpec& penalty,
                        const LambdaGrid& grid, int folds, std::uint64_t seed, Engine engine,
                        const SolverOptions& opts = {}, CvMetric metric = CvMetric::MR,
                        int threads = 1);

struct Cv2dResult {
  std::vector<double> lambda2_values;
  std::vector<CvResult> per_lambda2;  // one l1 sweep per ridge level
  double lambda2_min = 0.0;
  double lambda1_min = 0.0;
  double best_mean_metric = 0.0;
};

// Optional two-dimensional selection: sweeps the l1 path once per candidate
// ridge level and picks the (lambda2, lambda1) pair with the smallest mean
// metric. Ties resolve to the earlier lambda2 candidate, then the larger
// lambda1.
Cv2dResult cross_validate_2d(const Dataset& data, const LossSpec& loss,
                             const PenaltySpec& penalty,
                             const std::vector<double>& lambda2_values, const LambdaGrid& grid,
                             int folds, std::uint64_t seed, Engine engine,
                             const SolverOptions& opts = {}, CvMetric metric = CvMetric::MR,
                             int threads = 1);

}  // namespace bernsvm
