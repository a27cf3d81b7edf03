#pragma once

#include <Eigen/Core>

namespace bernsvm {

// min c'x subject to A x >= b, x >= 0.
struct LpProblem {
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
};

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct LpSolution {
  Eigen::VectorXd x;
  double objective = 0.0;
  LpStatus status = LpStatus::Optimal;
};

// Two-phase dense tableau simplex. Deterministic pivoting: Dantzig rule with
// lowest-index ties, falling back to Bland's rule after a fixed number of
// iterations to rule out cycling. Desk-scale problems only.
LpSolution solve_lp(const LpProblem& problem);

}  // namespace bernsvm
