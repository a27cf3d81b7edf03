#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bernsvm {

// Raised by standardize() when no column carries any variation.
struct all_constant_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// n x p design with labels in {-1, +1}.
struct Dataset {
  Eigen::MatrixXd x;
  Eigen::VectorXd y;

  Eigen::Index n() const { return x.rows(); }
  Eigen::Index p() const { return x.cols(); }
};

// Validates finiteness, label coding and minimal dimensions (n >= 2, p >= 1).
Dataset make_dataset(Eigen::MatrixXd x, Eigen::VectorXd y);

// Column-standardized design: retained columns have mean 0 and mean square 1
// under the 1/n convention. Zero-variance columns are listed in `dropped`,
// zeroed out in x_std and carry scale 1; their coefficients are always
// reported as exactly 0.
struct StandardizedDesign {
  Eigen::MatrixXd x_std;
  Eigen::VectorXd centers;
  Eigen::VectorXd scales;
  std::vector<Eigen::Index> dropped;

  Eigen::Index n() const { return x_std.rows(); }
  Eigen::Index p() const { return x_std.cols(); }
  bool is_dropped(Eigen::Index j) const;
};

StandardizedDesign standardize(const Dataset& data);

// Applies the training standardizer to new rows (prediction path).
Eigen::MatrixXd apply_standardizer(const StandardizedDesign& design, const Eigen::MatrixXd& x);

// Maps coefficients fitted on x_std back to the raw scale so that
// beta0 + x' beta reproduces beta0_std + x_std' beta_std on every row.
std::pair<double, Eigen::VectorXd> destandardize_coefficients(
    double beta0_std, const Eigen::VectorXd& beta_std, const StandardizedDesign& design);

}  // namespace bernsvm
