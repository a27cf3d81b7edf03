#pragma once

#include <string>
#include <vector>

#include "bernsvm/solver.hpp"

namespace bernsvm {

// Self-describing JSON model document, versioned. Coefficients are stored on
// the raw feature scale so a loaded model predicts directly from raw rows.
struct SavedModel {
  int schema_version = 1;
  double beta0 = 0.0;
  Eigen::VectorXd beta;
  std::vector<std::string> feature_names;
  std::string label_name;
  double delta = 0.0;
  std::string penalty_family;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double a = 0.0;
  std::string engine;
  bool converged = false;
  int passes = 0;
  double objective = 0.0;
  std::vector<Eigen::Index> dropped_columns;
};

void save_model(const std::string& path, const SavedModel& model);
SavedModel load_model(const std::string& path);

}  // namespace bernsvm
