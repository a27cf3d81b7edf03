#include "bernsvm/simplex.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace bernsvm {

namespace {

constexpr double kReducedCostTol = 1e-9;
constexpr double kPivotTol = 1e-11;
constexpr int kDantzigLimit = 20000;
constexpr int kTotalLimit = 200000;

struct Tableau {
  Eigen::MatrixXd t;   // m x ncols, constraint rows in canonical form
  Eigen::VectorXd rhs; // >= 0
  Eigen::RowVectorXd d;  // reduced costs
  double obj = 0.0;
  std::vector<Eigen::Index> basis;
  Eigen::Index artificial_start = 0;  // columns >= this never enter in phase 2

  void pivot(Eigen::Index row, Eigen::Index col) {
    const double piv = t(row, col);
    t.row(row) /= piv;
    rhs[row] /= piv;
    for (Eigen::Index i = 0; i < t.rows(); ++i) {
      if (i == row) continue;
      const double f = t(i, col);
      if (f != 0.0) {
        t.row(i) -= f * t.row(row);
        rhs[i] -= f * rhs[row];
        rhs[i] = std::max(rhs[i], 0.0);
      }
    }
    const double fd = d[col];
    if (fd != 0.0) {
      d -= fd * t.row(row);
      obj += fd * rhs[row];  // entering at level rhs[row] moves z by d_q * level
    }
    basis[static_cast<std::size_t>(row)] = col;
  }

  // Returns false when no entering column remains (current point optimal).
  bool iterate(bool phase_two, int& iters, LpStatus& status) {
    const Eigen::Index limit = phase_two ? artificial_start : t.cols();
    while (true) {
      Eigen::Index entering = -1;
      if (iters < kDantzigLimit) {
        double best = -kReducedCostTol;
        for (Eigen::Index j = 0; j < limit; ++j) {
          if (d[j] < best) {
            best = d[j];
            entering = j;
          }
        }
      } else {
        for (Eigen::Index j = 0; j < limit; ++j) {
          if (d[j] < -kReducedCostTol) {
            entering = j;
            break;
          }
        }
      }
      if (entering < 0) return false;

      Eigen::Index leaving = -1;
      double best_ratio = 0.0;
      for (Eigen::Index i = 0; i < t.rows(); ++i) {
        const double a = t(i, entering);
        if (a <= kPivotTol) continue;
        const double ratio = rhs[i] / a;
        if (leaving < 0 || ratio < best_ratio - 1e-12 ||
            (ratio < best_ratio + 1e-12 &&
             basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leaving)])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) {
        status = LpStatus::Unbounded;
        return false;
      }
      pivot(leaving, entering);
      if (++iters >= kTotalLimit) {
        status = LpStatus::IterationLimit;
        return false;
      }
    }
  }
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem) {
  const Eigen::Index m = problem.a.rows();
  const Eigen::Index n0 = problem.a.cols();
  if (problem.b.size() != m || problem.c.size() != n0) {
    throw std::invalid_argument("solve_lp: inconsistent dimensions");
  }

  Tableau tab;
  const Eigen::Index ncols = n0 + 2 * m;
  tab.artificial_start = n0 + m;
  tab.t = Eigen::MatrixXd::Zero(m, ncols);
  tab.rhs.resize(m);
  tab.basis.resize(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) {
    const double sign = problem.b[i] < 0.0 ? -1.0 : 1.0;
    tab.t.row(i).head(n0) = sign * problem.a.row(i);
    tab.t(i, n0 + i) = -sign;           // surplus
    tab.t(i, n0 + m + i) = 1.0;         // artificial
    tab.rhs[i] = sign * problem.b[i];
    tab.basis[static_cast<std::size_t>(i)] = n0 + m + i;
  }

  // Phase 1: minimize the artificial sum.
  tab.d = Eigen::RowVectorXd::Zero(ncols);
  tab.d.segment(n0 + m, m).setOnes();
  for (Eigen::Index i = 0; i < m; ++i) tab.d -= tab.t.row(i);
  tab.d.segment(n0 + m, m).setZero();
  tab.obj = tab.rhs.sum();

  LpSolution solution;
  solution.status = LpStatus::Optimal;
  int iters = 0;
  tab.iterate(false, iters, solution.status);
  if (solution.status != LpStatus::Optimal) {
    if (solution.status == LpStatus::Unbounded) solution.status = LpStatus::Infeasible;
    return solution;
  }
  if (tab.obj > 1e-7) {
    solution.status = LpStatus::Infeasible;
    return solution;
  }

  // Pivot any artificial still basic (at zero level) onto a structural column.
  for (Eigen::Index i = 0; i < m; ++i) {
    if (tab.basis[static_cast<std::size_t>(i)] < tab.artificial_start) continue;
    for (Eigen::Index j = 0; j < tab.artificial_start; ++j) {
      if (std::fabs(tab.t(i, j)) > 1e-8) {
        tab.pivot(i, j);
        break;
      }
    }
  }

  // Phase 2 with the real costs.
  Eigen::RowVectorXd cost = Eigen::RowVectorXd::Zero(ncols);
  cost.head(n0) = problem.c.transpose();
  tab.d = cost;
  tab.obj = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    const double cb = cost[tab.basis[static_cast<std::size_t>(i)]];
    if (cb != 0.0) {
      tab.d -= cb * tab.t.row(i);
      tab.obj += cb * tab.rhs[i];
    }
  }
  tab.d.segment(n0 + m, m).setConstant(1.0);  // keep artificials unattractive
  tab.iterate(true, iters, solution.status);
  if (solution.status != LpStatus::Optimal) return solution;

  solution.x = Eigen::VectorXd::Zero(n0);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Eigen::Index b = tab.basis[static_cast<std::size_t>(i)];
    if (b < n0) solution.x[b] = tab.rhs[i];
  }
  solution.objective = problem.c.dot(solution.x);
  return solution;
}

}  // namespace bernsvm
