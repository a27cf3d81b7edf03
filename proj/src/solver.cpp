#include "bernsvm/solver.hpp"

#include <cmath>

namespace bernsvm {

const char* engine_name(Engine engine) {
  switch (engine) {
    case Engine::GCD: return "gcd";
    case Engine::IRLS: return "irls";
    case Engine::PROX: return "prox";
  }
  return "?";
}

Engine engine_from_name(const std::string& name) {
  if (name == "gcd") return Engine::GCD;
  if (name == "irls") return Engine::IRLS;
  if (name == "prox") return Engine::PROX;
  throw std::invalid_argument("unknown engine: " + name);
}

void require_two_classes(const Eigen::VectorXd& y) {
  bool pos = false, neg = false;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    pos = pos || y[i] > 0;
    neg = neg || y[i] < 0;
  }
  if (!pos || !neg) {
    throw std::invalid_argument("fitting requires both classes to be present");
  }
}

void check_convex_engine_inputs(const StandardizedDesign& design, const Eigen::VectorXd& y,
                                const PenaltySpec& penalty) {
  if (y.size() != design.n()) {
    throw std::invalid_argument("solver: label length does not match design rows");
  }
  if (!penalty.is_convex()) {
    throw std::invalid_argument("solver: engines handle EN/AEN only; use lla_fit");
  }
  if (penalty.has_weights() && penalty.weights().size() != design.p()) {
    throw std::invalid_argument("solver: weight length does not match design columns");
  }
  require_two_classes(y);
}

Eigen::VectorXd margins(const StandardizedDesign& design, const Eigen::VectorXd& y,
                        double beta0, const Eigen::VectorXd& beta) {
  return y.array() * ((design.x_std * beta).array() + beta0);
}

double objective_value(const StandardizedDesign& design, const Eigen::VectorXd& y,
                       double beta0, const Eigen::VectorXd& beta, const LossSpec& loss,
                       const PenaltySpec& penalty) {
  const Eigen::VectorXd m = margins(design, y, beta0, beta);
  double loss_sum = 0.0;
  for (Eigen::Index i = 0; i < m.size(); ++i) loss_sum += loss.value(m[i]);
  return loss_sum / static_cast<double>(m.size()) + penalty_value(beta, penalty);
}

double kkt_residual(const StandardizedDesign& design, const Eigen::VectorXd& y,
                    double beta0, const Eigen::VectorXd& beta, const LossSpec& loss,
                    const PenaltySpec& penalty) {
  const Eigen::Index n = design.n();
  const Eigen::VectorXd m = margins(design, y, beta0, beta);
  Eigen::VectorXd gy(n);
  for (Eigen::Index i = 0; i < n; ++i) gy[i] = loss.grad(m[i]) * y[i];
  const double inv_n = 1.0 / static_cast<double>(n);

  double worst = std::fabs(gy.sum() * inv_n);
  const Eigen::VectorXd grad = design.x_std.transpose() * gy * inv_n;
  for (Eigen::Index j = 0; j < beta.size(); ++j) {
    if (design.is_dropped(j)) continue;
    const double thr = penalty.lambda1() * penalty.weight(j);
    double viol;
    if (beta[j] != 0.0) {
      viol = std::fabs(grad[j] + penalty.lambda2() * beta[j] +
                       thr * (beta[j] > 0 ? 1.0 : -1.0));
    } else {
      viol = std::max(0.0, std::fabs(grad[j]) - thr);
    }
    worst = std::max(worst, viol);
  }
  return worst;
}

double null_intercept(const Eigen::VectorXd& y, const LossSpec& loss) {
  const double inv_n = 1.0 / static_cast<double>(y.size());
  const double step = 1.0 / loss.big_l_relaxed();
  double b0 = 0.0;
  for (int it = 0; it < 200000; ++it) {
    double g = 0.0;
    for (Eigen::Index i = 0; i < y.size(); ++i) g += loss.grad(y[i] * b0) * y[i];
    g *= inv_n;
    const double delta = -g * step;
    b0 += delta;
    if (std::fabs(delta) < 1e-12) break;
  }
  return b0;
}

}  // namespace bernsvm
