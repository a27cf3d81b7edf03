#pragma once

#include <vector>

#include "bernsvm/solver.hpp"

namespace bernsvm {

struct LlaState {
  int iteration = 0;
  Eigen::VectorXd weights;  // P'(|beta_j|) / lambda1, each in [0, 1]
  ModelFit fit;
};

// Local linear approximation for the SCAD / MCP penalties: start from the
// plain lasso solution (unit weights), then repeatedly refit the weighted-l1
// problem with weights P'(|beta_j|)/lambda1 until the weight vector moves
// less than 1e-6 in sup norm or max_lla_iters refits are spent. Each refit is
// warm-started at the previous iterate, so the sequence of true penalized
// objectives is non-increasing. The returned fit carries the nonconvex
// penalty and its objective.
// A warm start only accelerates the convex initializer; it cannot move the
// lasso solution the iteration is anchored to.
ModelFit lla_fit(const StandardizedDesign& design, const Eigen::VectorXd& y,
                 const LossSpec& loss, const PenaltySpec& penalty, const SolverOptions& opts,
                 Engine engine, int max_lla_iters = 5, std::vector<LlaState>* trace = nullptr,
                 const WarmStart* warm = nullptr);

}  // namespace bernsvm
