#pragma once

#include <vector>

#include "bernsvm/solver.hpp"

namespace bernsvm {

struct LambdaGrid {
  Eigen::VectorXd values;       // strictly decreasing
  double null_intercept = 0.0;  // intercept-only stationary point
};

// Log-spaced grid of n_lambda values from lambda_max down to
// ratio * lambda_max, where lambda_max is the smallest l1 level at which the
// null model is stationary:
//   lambda_max = max_j |(1/n) sum B'(y_i b0) y_i x_ij| / w_j
// at the intercept-only optimum b0.
LambdaGrid lambda_grid(const StandardizedDesign& design, const Eigen::VectorXd& y,
                       const LossSpec& loss, const PenaltySpec& penalty, int n_lambda,
                       double ratio);

// Pathwise defaults: ratio 0.01 when p > n, else 1e-4.
double default_lambda_ratio(Eigen::Index n, Eigen::Index p);

struct PathResult {
  Eigen::VectorXd lambdas;
  std::vector<ModelFit> fits;
  std::vector<int> nonzero_counts;
  double null_intercept = 0.0;
};

// Fits from the largest lambda down, warm-starting each fit at the previous
// solution (the first at the null model). Convex families go straight to the
// requested engine; SCAD/MCP run the LLA loop with that engine inside.
// Non-converged fits are recorded, not fatal.
PathResult fit_path(const StandardizedDesign& design, const Eigen::VectorXd& y,
                    const LossSpec& loss, const PenaltySpec& penalty,
                    const Eigen::VectorXd& lambdas, Engine engine,
                    const SolverOptions& opts = {});

}  // namespace bernsvm
