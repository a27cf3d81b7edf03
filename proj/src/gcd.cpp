#include "bernsvm/gcd.hpp"

#include <cmath>
#include <numeric>
#include <vector>

namespace bernsvm {

ModelFit gcd_fit(const StandardizedDesign& design, const Eigen::VectorXd& y,
                 const LossSpec& loss, const PenaltySpec& penalty,
                 const SolverOptions& opts, const WarmStart* warm) {
  check_convex_engine_inputs(design, y, penalty);
  const Eigen::Index n = design.n();
  const Eigen::Index p = design.p();
  const double inv_n = 1.0 / static_cast<double>(n);
  const double lt = loss.big_l_relaxed();
  const double omega = penalty.lambda2() + lt;

  double b0 = 0.0;
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
  if (warm) {
    if (warm->beta.size() != p) {
      throw std::invalid_argument("gcd_fit: warm start length mismatch");
    }
    b0 = warm->beta0;
    beta = warm->beta;
  }

  const Eigen::MatrixXd yx = y.asDiagonal() * design.x_std;
  Eigen::VectorXd r = margins(design, y, b0, beta);

  std::vector<Eigen::Index> all_coords(p);
  std::iota(all_coords.begin(), all_coords.end(), Eigen::Index{0});

  // Every coordinate visit evaluates the loss gradient at the current cached
  // margins; only the margins themselves are maintained incrementally.
  auto sweep = [&](const std::vector<Eigen::Index>& coords) {
    double max_change = 0.0;
    for (const Eigen::Index j : coords) {
      const double* yxj = yx.col(j).data();
      double acc = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) acc += loss.grad(r[i]) * yxj[i];
      const double z = -inv_n * acc + lt * beta[j];
      const double bj = soft_threshold(z, penalty.lambda1() * penalty.weight(j)) / omega;
      const double d = bj - beta[j];
      if (d != 0.0) {
        r += d * yx.col(j);
        beta[j] = bj;
        max_change = std::max(max_change, std::fabs(d));
      }
      if (opts.on_update) opts.on_update(j, b0, beta);
    }
    double acc0 = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) acc0 += loss.grad(r[i]) * y[i];
    const double d0 = -inv_n * acc0 / lt;
    if (d0 != 0.0) {
      r += d0 * y;
      b0 += d0;
      max_change = std::max(max_change, std::fabs(d0));
    }
    if (opts.on_update) opts.on_update(-1, b0, beta);
    return max_change;
  };

  const auto kkt_cached = [&]() {
    Eigen::VectorXd gv(n);
    for (Eigen::Index i = 0; i < n; ++i) gv[i] = loss.grad(r[i]);
    double worst = std::fabs(inv_n * gv.dot(y));
    for (Eigen::Index j = 0; j < p; ++j) {
      if (design.is_dropped(j)) continue;
      const double g = inv_n * gv.dot(yx.col(j));
      const double thr = penalty.lambda1() * penalty.weight(j);
      const double viol =
          beta[j] != 0.0
              ? std::fabs(g + penalty.lambda2() * beta[j] + (beta[j] > 0 ? thr : -thr))
              : std::max(0.0, std::fabs(g) - thr);
      worst = std::max(worst, viol);
    }
    return worst;
  };

  // Refinement target for the active-set rounds; tightened only when the
  // stationarity check rejects a candidate.
  double cur_tol = opts.tol;
  auto active_rounds = [&](int& passes) {
    if (!opts.use_active_set) return;
    std::vector<Eigen::Index> active;
    active.reserve(static_cast<std::size_t>(p));
    for (Eigen::Index j = 0; j < p; ++j) {
      if (beta[j] != 0.0) active.push_back(j);
    }
    while (passes < opts.max_passes) {
      const double change = sweep(active);
      ++passes;
      if (change < cur_tol) break;
    }
  };

  int passes = 0;
  bool converged = false;
  while (passes < opts.max_passes) {
    const double change = sweep(all_coords);
    ++passes;
    if (change < opts.tol) {
      if (kkt_cached() <= 10.0 * opts.tol) {
        converged = true;
        break;
      }
      if (change == 0.0) break;
      cur_tol = std::max(0.25 * cur_tol, 1e-15);
    }
    active_rounds(passes);
  }

  ModelFit fit;
  fit.beta0 = b0;
  fit.beta = std::move(beta);
  fit.passes = passes;
  fit.converged = converged;
  fit.delta = loss.delta();
  fit.penalty = penalty;
  fit.engine = Engine::GCD;
  fit.margin_drift =
      (r - margins(design, y, fit.beta0, fit.beta)).cwiseAbs().maxCoeff();
  fit.objective = objective_value(design, y, fit.beta0, fit.beta, loss, penalty);
  return fit;
}

CoordinateSurrogate make_coordinate_surrogate(const StandardizedDesign& design,
                                              const Eigen::VectorXd& y,
                                              const Eigen::VectorXd& r, Eigen::Index j,
                                              const LossSpec& loss,
                                              const PenaltySpec& penalty,
                                              double curvature, double beta_tilde) {
  const Eigen::Index n = design.n();
  const double inv_n = 1.0 / static_cast<double>(n);
  CoordinateSurrogate s;
  s.beta_tilde = beta_tilde;
  s.curvature = curvature;
  s.l1_threshold = penalty.lambda1() * penalty.weight(j);
  s.l2 = penalty.lambda2();
  double loss_sum = 0.0;
  double slope = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    loss_sum += loss.value(r[i]);
    slope += loss.grad(r[i]) * y[i] * design.x_std(i, j);
  }
  s.loss_at_tilde = loss_sum * inv_n;
  s.slope = slope * inv_n;
  return s;
}

double coordinate_objective(const StandardizedDesign& design, const Eigen::VectorXd& y,
                            const Eigen::VectorXd& r, Eigen::Index j, const LossSpec& loss,
                            const PenaltySpec& penalty, double beta_tilde, double beta_j) {
  const Eigen::Index n = design.n();
  const double d = beta_j - beta_tilde;
  double loss_sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    loss_sum += loss.value(r[i] + y[i] * design.x_std(i, j) * d);
  }
  return loss_sum / static_cast<double>(n) +
         penalty.lambda1() * penalty.weight(j) * std::fabs(beta_j) +
         0.5 * penalty.lambda2() * beta_j * beta_j;
}

}  // namespace bernsvm
