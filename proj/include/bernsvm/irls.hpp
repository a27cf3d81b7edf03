#pragma once

#include "bernsvm/solver.hpp"

namespace bernsvm {

// Working response of the modified Newton step with uniform curvature
// phi = big_l(): u_i = y_i B'(y_i (b0 + x_i' b)), z = (b0 + X b) - u / phi.
struct WorkingResponse {
  Eigen::VectorXd z;
  Eigen::VectorXd u;
  double phi = 0.0;
};

WorkingResponse working_response(const StandardizedDesign& design, const Eigen::VectorXd& y,
                                 double beta0, const Eigen::VectorXd& beta,
                                 const LossSpec& loss);

// Outer loop: rebuild the working response at the current iterate; inner
// loop: cyclic coordinate descent on the penalized least squares
//   (1/2n) sum L (z_i - b0 - x_i' b)^2 + P(b),
// whose updates collapse to
//   beta_j <- S((L/n) sum x_ij r_i + L beta_j, w_j lambda1) / (lambda2 + L),
//   beta0 <- beta0 + mean(r),
// with r the working residual. Outer iterations stop once the iterate moves
// less than tol in every coordinate and the stationarity residual of the true
// objective reaches 10 tol. `passes` counts outer iterations.
ModelFit irls_fit(const StandardizedDesign& design, const Eigen::VectorXd& y,
                  const LossSpec& loss, const PenaltySpec& penalty,
                  const SolverOptions& opts = {}, const WarmStart* warm = nullptr);

}  // namespace bernsvm
