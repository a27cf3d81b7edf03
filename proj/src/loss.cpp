#include "bernsvm/loss.hpp"

namespace bernsvm {

LossSpec::LossSpec(double delta) {
  if (!std::isfinite(delta) || delta <= 0.0) {
    throw std::invalid_argument("LossSpec: delta must be a positive real");
  }
  delta_ = delta;
  big_l_ = 3.0 / (4.0 * delta);
  big_l_relaxed_ = (1.0 + 1e-6) * big_l_;
  const double d3 = delta * delta * delta;
  inv_4d3_ = 1.0 / (4.0 * d3);
  inv_16d3_ = 1.0 / (16.0 * d3);
}

}  // namespace bernsvm
