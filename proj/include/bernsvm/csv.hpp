#pragma once

#include <string>
#include <vector>

#include "bernsvm/data.hpp"

namespace bernsvm {

struct csv_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LoadedCsv {
  Dataset data;
  std::vector<std::string> feature_names;
  std::string label_name;
  bool remapped_zero_one = false;  // labels arrived as {0,1} and 0 became -1
};

// Plain numeric CSV, first row is a header, one column holds the labels
// ({-1,1} or {0,1}). Malformed input raises csv_error with row/column
// coordinates in the message.
LoadedCsv load_csv(const std::string& path, const std::string& label_column);

void write_csv(const std::string& path, const Dataset& data,
               const std::vector<std::string>& feature_names, const std::string& label_name);

// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace bernsvm
