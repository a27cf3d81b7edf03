#pragma once

#include "bernsvm/solver.hpp"

namespace bernsvm {

// Majorized cyclic coordinate descent for the convex penalties. Each sweep
// updates every coordinate by soft-thresholding the surrogate minimizer
//   beta_j <- S(Z_j, lambda1 w_j) / (lambda2 + Lt),
//   Z_j = -(1/n) sum B'(r_i) y_i x_ij + Lt beta_j,
// with margins r maintained incrementally, then moves the intercept by
// -Lt^{-1} (1/n) sum B'(r_i) y_i. Lt is the relaxed curvature bound.
// Convergence requires the max coordinate change of a full sweep (intercept
// included) to drop below tol and the stationarity residual to reach 10 tol.
ModelFit gcd_fit(const StandardizedDesign& design, const Eigen::VectorXd& y,
                 const LossSpec& loss, const PenaltySpec& penalty,
                 const SolverOptions& opts = {}, const WarmStart* warm = nullptr);

// One-coordinate quadratic surrogate frozen at the current iterate;
// verification surface for majorization and closed-form update checks.
struct CoordinateSurrogate {
  double beta_tilde = 0.0;
  double loss_at_tilde = 0.0;  // (1/n) sum B(r_i)
  double slope = 0.0;          // (1/n) sum B'(r_i) y_i x_ij
  double curvature = 0.0;
  double l1_threshold = 0.0;   // lambda1 w_j
  double l2 = 0.0;

  double value(double beta_j) const {
    const double d = beta_j - beta_tilde;
    return loss_at_tilde + slope * d + 0.5 * curvature * d * d +
           l1_threshold * std::fabs(beta_j) + 0.5 * l2 * beta_j * beta_j;
  }

  double closed_form_minimizer() const {
    const double z = -slope + curvature * beta_tilde;
    return soft_threshold(z, l1_threshold) / (l2 + curvature);
  }
};

// Builds the surrogate for coordinate j at margins r. Passing the plain
// curvature bound big_l() reproduces the working-response subproblem of the
// IRLS inner loop; big_l_relaxed() reproduces the production update.
CoordinateSurrogate make_coordinate_surrogate(const StandardizedDesign& design,
                                              const Eigen::VectorXd& y,
                                              const Eigen::VectorXd& r, Eigen::Index j,
                                              const LossSpec& loss,
                                              const PenaltySpec& penalty,
                                              double curvature, double beta_tilde);

// Exact one-coordinate objective F(beta_j) at the same frozen state.
double coordinate_objective(const StandardizedDesign& design, const Eigen::VectorXd& y,
                            const Eigen::VectorXd& r, Eigen::Index j, const LossSpec& loss,
                            const PenaltySpec& penalty, double beta_tilde, double beta_j);

}  // namespace bernsvm
