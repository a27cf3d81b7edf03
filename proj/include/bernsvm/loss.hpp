#pragma once

#include <cmath>
#include <stdexcept>

namespace bernsvm {

// SVM hinge loss (1 - t)_+.
inline double hinge(double t) {
  if (!std::isfinite(t)) {
    throw std::invalid_argument("hinge: non-finite margin");
  }
  return t < 1.0 ? 1.0 - t : 0.0;
}

// Smoothed hinge loss: the hinge outside [1-delta, 1+delta], and inside the
// band the unique convex quartic spline that matches value, slope and
// curvature of the hinge at both knots. With u = 1 - t + delta the spline and
// its derivatives reduce to
//
//   value:     u^3 (4 delta - u) / (16 delta^3)
//   gradient:  u^2 (u - 3 delta) / (4 delta^3)
//   curvature: 3 u (2 delta - u) / (4 delta^3)
//
// The curvature is bounded by big_l() = 3/(4 delta); big_l_relaxed() is the
// slightly inflated constant (1 + 1e-6) * big_l used as the majorization
// curvature so that quadratic surrogates are strictly above the loss away
// from the expansion point.
class LossSpec {
 public:
  explicit LossSpec(double delta);

  double delta() const { return delta_; }
  double big_l() const { return big_l_; }
  double big_l_relaxed() const { return big_l_relaxed_; }

  double value(double t) const {
    check_finite(t);
    const double d = 1.0 - t;
    if (d > delta_) return d;
    if (d < -delta_) return 0.0;
    const double u = d + delta_;
    return u * u * u * (4.0 * delta_ - u) * inv_16d3_;
  }

  // In [-1, 0].
  double grad(double t) const {
    check_finite(t);
    const double d = 1.0 - t;
    if (d > delta_) return -1.0;
    if (d < -delta_) return 0.0;
    const double u = d + delta_;
    return u * u * (u - 3.0 * delta_) * inv_4d3_;
  }

  // In [0, big_l()].
  double hess(double t) const {
    check_finite(t);
    const double d = 1.0 - t;
    if (d > delta_ || d < -delta_) return 0.0;
    const double u = d + delta_;
    return 3.0 * u * (2.0 * delta_ - u) * inv_4d3_;
  }

 private:
  static void check_finite(double t) {
    if (!std::isfinite(t)) {
      throw std::invalid_argument("LossSpec: non-finite margin");
    }
  }

  double delta_;
  double big_l_;
  double big_l_relaxed_;
  double inv_4d3_;
  double inv_16d3_;
};

}  // namespace bernsvm
