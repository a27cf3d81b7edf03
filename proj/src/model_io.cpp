#include "bernsvm/model_io.hpp"

#include <fstream>

#include <json.hpp>

namespace bernsvm {

void save_model(const std::string& path, const SavedModel& model) {
  nlohmann::json doc;
  doc["schema_version"] = model.schema_version;
  doc["model"] = "bernsvm-linear";
  doc["intercept"] = model.beta0;
  doc["coefficients"] =
      std::vector<double>(model.beta.data(), model.beta.data() + model.beta.size());
  doc["feature_names"] = model.feature_names;
  doc["label_name"] = model.label_name;
  doc["delta"] = model.delta;
  doc["penalty"] = {{"family", model.penalty_family},
                    {"lambda1", model.lambda1},
                    {"lambda2", model.lambda2},
                    {"a", model.a}};
  doc["engine"] = model.engine;
  doc["converged"] = model.converged;
  doc["passes"] = model.passes;
  doc["objective"] = model.objective;
  doc["dropped_columns"] = model.dropped_columns;

  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write model file '" + path + "'");
  }
  out << doc.dump(2) << '\n';
}

SavedModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open model file '" + path + "'");
  }
  nlohmann::json doc;
  in >> doc;
  SavedModel model;
  model.schema_version = doc.at("schema_version").get<int>();
  if (model.schema_version != 1) {
    throw std::runtime_error("unsupported model schema version in '" + path + "'");
  }
  model.beta0 = doc.at("intercept").get<double>();
  const auto coeffs = doc.at("coefficients").get<std::vector<double>>();
  model.beta = Eigen::Map<const Eigen::VectorXd>(coeffs.data(),
                                                 static_cast<Eigen::Index>(coeffs.size()));
  model.feature_names = doc.at("feature_names").get<std::vector<std::string>>();
  model.label_name = doc.at("label_name").get<std::string>();
  model.delta = doc.at("delta").get<double>();
  model.penalty_family = doc.at("penalty").at("family").get<std::string>();
  model.lambda1 = doc.at("penalty").at("lambda1").get<double>();
  model.lambda2 = doc.at("penalty").at("lambda2").get<double>();
  model.a = doc.at("penalty").at("a").get<double>();
  model.engine = doc.at("engine").get<std::string>();
  model.converged = doc.at("converged").get<bool>();
  model.passes = doc.at("passes").get<int>();
  model.objective = doc.at("objective").get<double>();
  model.dropped_columns = doc.at("dropped_columns").get<std::vector<Eigen::Index>>();
  return model;
}

}  // namespace bernsvm
