#pragma once

#include <Eigen/Core>
#include <functional>

#include "bernsvm/data.hpp"
#include "bernsvm/loss.hpp"
#include "bernsvm/penalty.hpp"

namespace bernsvm {

enum class Engine { GCD, IRLS, PROX };

const char* engine_name(Engine engine);
Engine engine_from_name(const std::string& name);

struct SolverOptions {
  int max_passes = 10000;
  double tol = 1e-7;
  bool use_active_set = true;
  // Invoked after every coordinate update, with j = -1 for the intercept.
  // Test instrumentation only.
  std::function<void(Eigen::Index j, double beta0, const Eigen::VectorXd& beta)> on_update;
};

struct ModelFit {
  double beta0 = 0.0;
  Eigen::VectorXd beta;
  double objective = 0.0;  // recomputed from scratch at the returned point
  int passes = 0;
  bool converged = false;
  double margin_drift = 0.0;  // |cached - recomputed| margins, sup norm
  double delta = 0.0;
  PenaltySpec penalty;
  Engine engine = Engine::GCD;

  Eigen::Index nonzero_count() const {
    Eigen::Index k = 0;
    for (Eigen::Index j = 0; j < beta.size(); ++j) k += beta[j] != 0.0;
    return k;
  }
};

struct WarmStart {
  double beta0 = 0.0;
  Eigen::VectorXd beta;
};

void require_two_classes(const Eigen::VectorXd& y);

// Shared preconditions of the convex-penalty engines.
void check_convex_engine_inputs(const StandardizedDesign& design, const Eigen::VectorXd& y,
                                const PenaltySpec& penalty);

// Margins y_i (beta0 + x_i' beta).
Eigen::VectorXd margins(const StandardizedDesign& design, const Eigen::VectorXd& y,
                        double beta0, const Eigen::VectorXd& beta);

// (1/n) sum B(margins) + penalty, evaluated from scratch.
double objective_value(const StandardizedDesign& design, const Eigen::VectorXd& y,
                       double beta0, const Eigen::VectorXd& beta, const LossSpec& loss,
                       const PenaltySpec& penalty);

// Max stationarity violation over the intercept and all coordinates for the
// convex families: zero coordinates measure the excess of the plain gradient
// over the l1 threshold, nonzero ones the full subgradient residual.
double kkt_residual(const StandardizedDesign& design, const Eigen::VectorXd& y,
                    double beta0, const Eigen::VectorXd& beta, const LossSpec& loss,
                    const PenaltySpec& penalty);

// Minimizer of (1/n) sum B(y_i b0) over b0, by damped gradient steps with the
// relaxed curvature bound.
double null_intercept(const Eigen::VectorXd& y, const LossSpec& loss);

}  // namespace bernsvm
