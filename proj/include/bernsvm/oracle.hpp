#pragma once

#include "bernsvm/simplex.hpp"
#include "bernsvm/solver.hpp"

namespace bernsvm {

// Reference solvers used only to cross-check the production engines.

// Proximal gradient (ISTA) on the convex objective with the fixed step
// 1 / (L sigma_max^2 / n + lambda2), sigma_max being the top singular value
// of the design with an intercept column appended. Slow but provably
// convergent to the shared global minimum.
ModelFit prox_grad_fit(const StandardizedDesign& design, const Eigen::VectorXd& y,
                       const LossSpec& loss, const PenaltySpec& penalty, double tol = 1e-10,
                       int max_iters = 200000, const WarmStart* warm = nullptr);

// Golden-section search for the minimizer of a unimodal function on [lo, hi].
// The comparisons honor the callable's own return type, so evaluating in
// long double pushes the localization noise floor well below 1e-9.
template <typename F>
double golden_section_minimize(F&& f, double lo, double hi, double tol = 1e-10) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  auto f1 = f(x1);
  auto f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

struct HingeLpSolution {
  double beta0 = 0.0;
  Eigen::VectorXd beta;
  double objective = 0.0;
};

// Exact minimizer of (1/n) sum (1 - y_i(b0 + x_i' b))_+ + lambda1 ||b||_1 via
// the slack-variable linear program (slacks for the hinge, split positive and
// negative parts for the free coefficients). Desk-scale only; a solver
// failure throws.
HingeLpSolution hinge_l1_lp(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, double lambda1);

}  // namespace bernsvm
