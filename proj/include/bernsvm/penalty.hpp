#pragma once

#include <Eigen/Core>
#include <cmath>
#include <stdexcept>

namespace bernsvm {

enum class PenaltyFamily { EN, AEN, SCADEN, MCPEN };

const char* family_name(PenaltyFamily family);
PenaltyFamily family_from_name(const std::string& name);

// Sparsity penalty P_{l1,l2}(beta) = sum_j P_{l1}(|beta_j|) + (l2/2)||beta||^2.
// The l1 part is plain (EN), coordinate-weighted (AEN), or one of the folded
// concave families SCAD / MCP with concavity parameter a.
class PenaltySpec {
 public:
  PenaltySpec() : PenaltySpec(PenaltyFamily::EN, 0.0, 0.0, 0.0, {}) {}

  static PenaltySpec elastic_net(double lambda1, double lambda2);
  // Requires strictly positive weights, one per coordinate.
  static PenaltySpec adaptive(double lambda1, double lambda2, Eigen::VectorXd weights);
  static PenaltySpec scad(double lambda1, double lambda2, double a = 3.7);
  static PenaltySpec mcp(double lambda1, double lambda2, double a = 3.0);
  // Weighted l1 subproblem used inside the LLA loop; zero weights are legal
  // here because the concave penalty derivative vanishes on its flat tail.
  static PenaltySpec lla_subproblem(double lambda1, double lambda2, Eigen::VectorXd weights);

  PenaltyFamily family() const { return family_; }
  double lambda1() const { return lambda1_; }
  double lambda2() const { return lambda2_; }
  double a() const { return a_; }

  bool has_weights() const { return weights_.size() > 0; }
  const Eigen::VectorXd& weights() const { return weights_; }
  double weight(Eigen::Index j) const { return weights_.size() == 0 ? 1.0 : weights_[j]; }

  bool is_convex() const {
    return family_ == PenaltyFamily::EN || family_ == PenaltyFamily::AEN;
  }

  // Same penalty at a different l1 level (path sweeps).
  PenaltySpec with_lambda1(double lambda1) const;

 private:
  PenaltySpec(PenaltyFamily family, double lambda1, double lambda2, double a,
              Eigen::VectorXd weights);

  PenaltyFamily family_;
  double lambda1_;
  double lambda2_;
  double a_;
  Eigen::VectorXd weights_;
};

// (|z| - t)_+ sign(z), t >= 0.
inline double soft_threshold(double z, double t) {
  if (z > t) return z - t;
  if (z < -t) return z + t;
  return 0.0;
}

double penalty_value(const Eigen::VectorXd& beta, const PenaltySpec& spec);

// First derivative of the SCAD or MCP l1 part at t >= 0; lies in [0, lambda1]
// and vanishes beyond the flat tail. Rejects convex families.
double nonconvex_deriv(double t, const PenaltySpec& spec);

}  // namespace bernsvm
