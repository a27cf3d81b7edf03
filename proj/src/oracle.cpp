#include "bernsvm/oracle.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace bernsvm {

ModelFit prox_grad_fit(const StandardizedDesign& design, const Eigen::VectorXd& y,
                       const LossSpec& loss, const PenaltySpec& penalty, double tol,
                       int max_iters, const WarmStart* warm) {
  check_convex_engine_inputs(design, y, penalty);
  const Eigen::Index n = design.n();
  const Eigen::Index p = design.p();
  const double inv_n = 1.0 / static_cast<double>(n);

  Eigen::MatrixXd augmented(n, p + 1);
  augmented.col(0).setOnes();
  augmented.rightCols(p) = design.x_std;
  const double sigma_max =
      Eigen::JacobiSVD<Eigen::MatrixXd>(augmented).singularValues()(0);
  const double step =
      1.0 / (loss.big_l() * sigma_max * sigma_max * inv_n + penalty.lambda2());

  double b0 = 0.0;
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
  if (warm) {
    b0 = warm->beta0;
    beta = warm->beta;
  }

  int iters = 0;
  bool converged = false;
  Eigen::VectorXd gy(n);
  while (iters < max_iters) {
    const Eigen::VectorXd m = margins(design, y, b0, beta);
    for (Eigen::Index i = 0; i < n; ++i) gy[i] = loss.grad(m[i]) * y[i];
    const double g0 = gy.sum() * inv_n;
    const Eigen::VectorXd g =
        design.x_std.transpose() * gy * inv_n + penalty.lambda2() * beta;

    double max_change = std::fabs(step * g0);
    b0 -= step * g0;
    for (Eigen::Index j = 0; j < p; ++j) {
      const double bj = soft_threshold(beta[j] - step * g[j],
                                       step * penalty.lambda1() * penalty.weight(j));
      max_change = std::max(max_change, std::fabs(bj - beta[j]));
      beta[j] = bj;
    }
    ++iters;
    if (max_change < tol) {
      converged = true;
      break;
    }
  }

  ModelFit fit;
  fit.beta0 = b0;
  fit.beta = std::move(beta);
  fit.passes = iters;
  fit.converged = converged;
  fit.delta = loss.delta();
  fit.penalty = penalty;
  fit.engine = Engine::PROX;
  fit.objective = objective_value(design, y, fit.beta0, fit.beta, loss, penalty);
  return fit;
}

HingeLpSolution hinge_l1_lp(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                            double lambda1) {
  const Eigen::Index n = x.rows();
  const Eigen::Index p = x.cols();
  if (y.size() != n) {
    throw std::invalid_argument("hinge_l1_lp: label length mismatch");
  }
  if (!(lambda1 >= 0.0)) {
    throw std::invalid_argument("hinge_l1_lp: lambda1 must be >= 0");
  }

  // Variables: [xi (n), beta+ (p), beta- (p), b0+, b0-], all >= 0.
  // Constraint i: xi_i + y_i x_i'(beta+ - beta-) + y_i (b0+ - b0-) >= 1.
  const Eigen::Index nv = n + 2 * p + 2;
  LpProblem lp;
  lp.a = Eigen::MatrixXd::Zero(n, nv);
  lp.b = Eigen::VectorXd::Ones(n);
  lp.c = Eigen::VectorXd::Zero(nv);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    lp.a(i, i) = 1.0;
    for (Eigen::Index j = 0; j < p; ++j) {
      const double v = y[i] * x(i, j);
      lp.a(i, n + j) = v;
      lp.a(i, n + p + j) = -v;
    }
    lp.a(i, n + 2 * p) = y[i];
    lp.a(i, n + 2 * p + 1) = -y[i];
  }
  lp.c.head(n).setConstant(inv_n);
  lp.c.segment(n, 2 * p).setConstant(lambda1);

  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal) {
    throw std::runtime_error("hinge_l1_lp: simplex failed to reach an optimum");
  }

  HingeLpSolution out;
  out.beta = sol.x.segment(n, p) - sol.x.segment(n + p, p);
  out.beta0 = sol.x[n + 2 * p] - sol.x[n + 2 * p + 1];
  out.objective = sol.objective;
  return out;
}

}  // namespace bernsvm
