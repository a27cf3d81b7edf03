#pragma once

#include <optional>
#include <string>

#include "bernsvm/solver.hpp"

namespace bernsvm {

// Labels sign(beta0 + x' beta) with sign(0) = +1. The coefficients must be on
// the same scale as x (standardized fit with standardized rows, or
// destandardized fit with raw rows).
Eigen::VectorXd predict(double beta0, const Eigen::VectorXd& beta, const Eigen::MatrixXd& x);
Eigen::VectorXd predict(const ModelFit& fit, const Eigen::MatrixXd& x);

// Error rates normalized by the full test size, not by class size: the two
// per-class terms then partition the misclassification rate exactly,
// (1 - se) + (1 - sp) = mr. Conventional sensitivity/specificity divide by
// the class counts instead and will read higher on unbalanced data.
struct ClassificationReport {
  double mr = 0.0;
  double se = 0.0;
  double sp = 0.0;
  Eigen::Index n_test = 0;
};

ClassificationReport classification_report(const Eigen::VectorXd& y_true,
                                           const Eigen::VectorXd& y_pred);

// Support-recovery precision and recall; nonzero means exactly != 0. Either
// rate with an empty denominator is reported as absent.
struct SelectionReport {
  std::optional<double> pr;
  std::optional<double> rc;
};

SelectionReport selection_report(const Eigen::VectorXd& beta_true,
                                 const Eigen::VectorXd& beta_hat);

struct PerfReport {
  double mr = 0.0;
  double se = 0.0;
  double sp = 0.0;
  std::optional<double> pr;
  std::optional<double> rc;
  Eigen::Index n_test = 0;

  std::string to_kv() const;
  static std::string csv_header();
  std::string csv_row() const;
};

PerfReport make_perf_report(const ClassificationReport& cls, const SelectionReport& sel);

}  // namespace bernsvm
