#include "bernsvm/irls.hpp"

#include <cmath>
#include <numeric>
#include <vector>

namespace bernsvm {

WorkingResponse working_response(const StandardizedDesign& design, const Eigen::VectorXd& y,
                                 double beta0, const Eigen::VectorXd& beta,
                                 const LossSpec& loss) {
  WorkingResponse wr;
  wr.phi = loss.big_l();
  const Eigen::VectorXd linpred = (design.x_std * beta).array() + beta0;
  wr.u.resize(y.size());
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    wr.u[i] = y[i] * loss.grad(y[i] * linpred[i]);
  }
  wr.z = linpred - wr.u / wr.phi;
  return wr;
}

ModelFit irls_fit(const StandardizedDesign& design, const Eigen::VectorXd& y,
                  const LossSpec& loss, const PenaltySpec& penalty,
                  const SolverOptions& opts, const WarmStart* warm) {
  check_convex_engine_inputs(design, y, penalty);
  const Eigen::Index n = design.n();
  const Eigen::Index p = design.p();
  const double inv_n = 1.0 / static_cast<double>(n);
  const double big_l = loss.big_l();
  const double omega = penalty.lambda2() + big_l;
  constexpr int kMaxInnerPasses = 100;

  double b0 = 0.0;
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
  if (warm) {
    if (warm->beta.size() != p) {
      throw std::invalid_argument("irls_fit: warm start length mismatch");
    }
    b0 = warm->beta0;
    beta = warm->beta;
  }

  Eigen::VectorXd linpred = (design.x_std * beta).array() + b0;
  Eigen::VectorXd r(n), z(n);

  std::vector<Eigen::Index> all_coords(p);
  std::iota(all_coords.begin(), all_coords.end(), Eigen::Index{0});

  double cur_tol = opts.tol;

  auto wls_round = [&](const std::vector<Eigen::Index>& coords) {
    double max_change = 0.0;
    for (const Eigen::Index j : coords) {
      const double num = big_l * (inv_n * design.x_std.col(j).dot(r) + beta[j]);
      const double bj = soft_threshold(num, penalty.lambda1() * penalty.weight(j)) / omega;
      const double d = bj - beta[j];
      if (d != 0.0) {
        r -= d * design.x_std.col(j);
        beta[j] = bj;
        max_change = std::max(max_change, std::fabs(d));
      }
      if (opts.on_update) opts.on_update(j, b0, beta);
    }
    const double d0 = r.mean();
    if (d0 != 0.0) {
      r.array() -= d0;
      b0 += d0;
      max_change = std::max(max_change, std::fabs(d0));
    }
    if (opts.on_update) opts.on_update(-1, b0, beta);
    return max_change;
  };

  int outer = 0;

  // One relinearization plus an inner coordinate-descent solve of the frozen
  // least-squares subproblem over `coords`; nested active rounds keep the
  // full-design variant from sweeping every column repeatedly.
  auto outer_iteration = [&](const std::vector<Eigen::Index>& coords, bool nested_active) {
    for (Eigen::Index i = 0; i < n; ++i) {
      r[i] = -y[i] * loss.grad(y[i] * linpred[i]) / big_l;
    }
    z = linpred + r;
    const double prev_b0 = b0;
    const Eigen::VectorXd prev_beta = beta;
    int inner = 0;
    while (inner < kMaxInnerPasses) {
      const double change = wls_round(coords);
      ++inner;
      if (change < cur_tol) break;
      if (!nested_active) continue;
      std::vector<Eigen::Index> active;
      active.reserve(static_cast<std::size_t>(p));
      for (Eigen::Index j = 0; j < p; ++j) {
        if (beta[j] != 0.0) active.push_back(j);
      }
      while (inner < kMaxInnerPasses) {
        const double inner_change = wls_round(active);
        ++inner;
        if (inner_change < cur_tol) break;
      }
    }
    linpred = z - r;
    ++outer;
    double moved = std::fabs(b0 - prev_b0);
    for (const Eigen::Index j : coords) {
      moved = std::max(moved, std::fabs(beta[j] - prev_beta[j]));
    }
    return moved;
  };

  const auto kkt_current = [&]() {
    Eigen::VectorXd gy(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      gy[i] = loss.grad(y[i] * linpred[i]) * y[i];
    }
    double worst = std::fabs(inv_n * gy.sum());
    for (Eigen::Index j = 0; j < p; ++j) {
      if (design.is_dropped(j)) continue;
      const double g = inv_n * gy.dot(design.x_std.col(j));
      const double thr = penalty.lambda1() * penalty.weight(j);
      const double viol =
          beta[j] != 0.0
              ? std::fabs(g + penalty.lambda2() * beta[j] + (beta[j] > 0 ? thr : -thr))
              : std::max(0.0, std::fabs(g) - thr);
      worst = std::max(worst, viol);
    }
    return worst;
  };

  bool converged = false;
  while (outer < opts.max_passes) {
    // Drive the problem restricted to the current support to its own fixed
    // point first; relinearizations there touch only the support columns.
    if (opts.use_active_set) {
      std::vector<Eigen::Index> active;
      active.reserve(static_cast<std::size_t>(p));
      for (Eigen::Index j = 0; j < p; ++j) {
        if (beta[j] != 0.0) active.push_back(j);
      }
      while (outer < opts.max_passes) {
        if (outer_iteration(active, false) < cur_tol) break;
      }
      if (outer >= opts.max_passes) break;
    }
    // Full outer iteration doubles as the violator check.
    const double moved = outer_iteration(all_coords, true);
    if (moved < opts.tol) {
      if (kkt_current() <= 10.0 * opts.tol) {
        converged = true;
        break;
      }
      if (moved == 0.0) break;
      cur_tol = std::max(0.25 * cur_tol, 1e-15);
    }
  }

  ModelFit fit;
  fit.beta0 = b0;
  fit.beta = std::move(beta);
  fit.passes = outer;
  fit.converged = converged;
  fit.delta = loss.delta();
  fit.penalty = penalty;
  fit.engine = Engine::IRLS;
  fit.margin_drift =
      (linpred - ((design.x_std * fit.beta).array() + fit.beta0).matrix())
          .cwiseAbs()
          .maxCoeff();
  fit.objective = objective_value(design, y, fit.beta0, fit.beta, loss, penalty);
  return fit;
}

}  // namespace bernsvm
