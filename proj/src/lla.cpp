#include "bernsvm/lla.hpp"

#include <cmath>

#include "bernsvm/gcd.hpp"
#include "bernsvm/irls.hpp"

namespace bernsvm {

namespace {

ModelFit engine_fit(Engine engine, const StandardizedDesign& design, const Eigen::VectorXd& y,
                    const LossSpec& loss, const PenaltySpec& penalty,
                    const SolverOptions& opts, const WarmStart* warm) {
  switch (engine) {
    case Engine::GCD: return gcd_fit(design, y, loss, penalty, opts, warm);
    case Engine::IRLS: return irls_fit(design, y, loss, penalty, opts, warm);
    default: throw std::invalid_argument("lla_fit: engine must be gcd or irls");
  }
}

}  // namespace

ModelFit lla_fit(const StandardizedDesign& design, const Eigen::VectorXd& y,
                 const LossSpec& loss, const PenaltySpec& penalty, const SolverOptions& opts,
                 Engine engine, int max_lla_iters, std::vector<LlaState>* trace,
                 const WarmStart* warm) {
  if (penalty.family() != PenaltyFamily::SCADEN && penalty.family() != PenaltyFamily::MCPEN) {
    throw std::invalid_argument("lla_fit: penalty family must be SCAD or MCP");
  }
  if (!(penalty.lambda1() > 0.0)) {
    throw std::invalid_argument("lla_fit: lambda1 must be positive");
  }
  if (max_lla_iters < 1) {
    throw std::invalid_argument("lla_fit: max_lla_iters must be >= 1");
  }
  const Eigen::Index p = design.p();

  Eigen::VectorXd w = Eigen::VectorXd::Ones(p);
  ModelFit fit = engine_fit(engine, design, y, loss,
                            PenaltySpec::lla_subproblem(penalty.lambda1(), penalty.lambda2(), w),
                            opts, warm);
  if (trace) trace->push_back({0, w, fit});

  for (int it = 1; it <= max_lla_iters; ++it) {
    Eigen::VectorXd w_new(p);
    for (Eigen::Index j = 0; j < p; ++j) {
      w_new[j] = nonconvex_deriv(std::fabs(fit.beta[j]), penalty) / penalty.lambda1();
    }
    if ((w_new - w).cwiseAbs().maxCoeff() < 1e-6) break;
    const WarmStart warm{fit.beta0, fit.beta};
    fit = engine_fit(engine, design, y, loss,
                     PenaltySpec::lla_subproblem(penalty.lambda1(), penalty.lambda2(), w_new),
                     opts, &warm);
    if (trace) trace->push_back({it, w_new, fit});
    w = std::move(w_new);
  }

  fit.penalty = penalty;
  fit.objective = objective_value(design, y, fit.beta0, fit.beta, loss, penalty);
  return fit;
}

}  // namespace bernsvm
