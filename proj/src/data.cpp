#include "bernsvm/data.hpp"

#include <algorithm>
#include <cmath>

namespace bernsvm {

Dataset make_dataset(Eigen::MatrixXd x, Eigen::VectorXd y) {
  if (x.rows() != y.size()) {
    throw std::invalid_argument("make_dataset: x and y row counts differ");
  }
  if (x.rows() < 2 || x.cols() < 1) {
    throw std::invalid_argument("make_dataset: need n >= 2 and p >= 1");
  }
  if (!x.allFinite()) {
    throw std::invalid_argument("make_dataset: design contains non-finite entries");
  }
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (y[i] != 1.0 && y[i] != -1.0) {
      throw std::invalid_argument("make_dataset: labels must be -1 or +1");
    }
  }
  return Dataset{std::move(x), std::move(y)};
}

bool StandardizedDesign::is_dropped(Eigen::Index j) const {
  return std::binary_search(dropped.begin(), dropped.end(), j);
}

StandardizedDesign standardize(const Dataset& data) {
  const Eigen::Index n = data.n();
  const Eigen::Index p = data.p();
  StandardizedDesign out;
  out.centers = data.x.colwise().mean();
  out.scales = Eigen::VectorXd::Ones(p);
  out.x_std = data.x.rowwise() - out.centers.transpose();
  for (Eigen::Index j = 0; j < p; ++j) {
    const double ms = out.x_std.col(j).squaredNorm() / static_cast<double>(n);
    const double scale = std::sqrt(ms);
    if (scale <= 1e-10 * std::max(1.0, std::fabs(out.centers[j]))) {
      out.dropped.push_back(j);
      out.x_std.col(j).setZero();
    } else {
      out.scales[j] = scale;
      out.x_std.col(j) /= scale;
    }
  }
  if (static_cast<Eigen::Index>(out.dropped.size()) == p) {
    throw all_constant_error("standardize: every column is constant; nothing to fit");
  }
  return out;
}

Eigen::MatrixXd apply_standardizer(const StandardizedDesign& design, const Eigen::MatrixXd& x) {
  if (x.cols() != design.p()) {
    throw std::invalid_argument("apply_standardizer: column count mismatch");
  }
  Eigen::MatrixXd out = x.rowwise() - design.centers.transpose();
  for (Eigen::Index j = 0; j < out.cols(); ++j) {
    if (design.is_dropped(j)) {
      out.col(j).setZero();
    } else {
      out.col(j) /= design.scales[j];
    }
  }
  return out;
}

std::pair<double, Eigen::VectorXd> destandardize_coefficients(
    double beta0_std, const Eigen::VectorXd& beta_std, const StandardizedDesign& design) {
  if (beta_std.size() != design.p()) {
    throw std::invalid_argument("destandardize_coefficients: length mismatch");
  }
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(design.p());
  double beta0 = beta0_std;
  for (Eigen::Index j = 0; j < design.p(); ++j) {
    if (design.is_dropped(j)) continue;
    beta[j] = beta_std[j] / design.scales[j];
    beta0 -= beta_std[j] * design.centers[j] / design.scales[j];
  }
  return {beta0, std::move(beta)};
}

}  // namespace bernsvm
