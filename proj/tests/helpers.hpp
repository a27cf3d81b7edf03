#pragma once

#include <Eigen/Core>
#include <cmath>

#include "bernsvm/bench.hpp"
#include "bernsvm/data.hpp"
#include "bernsvm/rng.hpp"

namespace testutil {

using namespace bernsvm;

inline Dataset small_instance(std::uint64_t seed, Eigen::Index n = 30, Eigen::Index p = 8) {
  return random_instance(seed, n, p, 0.2, 1.0);
}

// Mirror-balanced rows: for every (x, +1) there is (-x, -1), so the optimal
// intercept is 0 by symmetry.
inline Dataset symmetric_instance(std::uint64_t seed, Eigen::Index half, Eigen::Index p) {
  Rng rng(seed);
  Eigen::MatrixXd x(2 * half, p);
  Eigen::VectorXd y(2 * half);
  for (Eigen::Index i = 0; i < half; ++i) {
    for (Eigen::Index j = 0; j < p; ++j) {
      const double v = rng.normal() + (j == 0 ? 1.0 : 0.0);
      x(i, j) = v;
      x(half + i, j) = -v;
    }
    y[i] = 1.0;
    y[half + i] = -1.0;
  }
  return Dataset{std::move(x), std::move(y)};
}

inline double rel_gap(double a, double b) {
  return std::fabs(a - b) / std::max(1.0, std::max(std::fabs(a), std::fabs(b)));
}

}  // namespace testutil
