#include "bernsvm/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace bernsvm {

std::string format_double(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(',', start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

double parse_field(const std::string& field, std::size_t row, const std::string& col) {
  const char* first = field.data();
  const char* last = field.data() + field.size();
  while (first != last && (*first == ' ' || *first == '\t')) ++first;
  while (last != first && (*(last - 1) == ' ' || *(last - 1) == '\t')) --last;
  double value = 0.0;
  auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last || first == last) {
    std::ostringstream msg;
    msg << "row " << row << ", column '" << col << "': cannot parse '" << field
        << "' as a number";
    throw csv_error(msg.str());
  }
  return value;
}

}  // namespace

LoadedCsv load_csv(const std::string& path, const std::string& label_column) {
  std::ifstream in(path);
  if (!in) {
    throw csv_error("cannot open '" + path + "'");
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw csv_error("'" + path + "' is empty");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::vector<std::string> header = split_line(line);

  std::ptrdiff_t label_idx = -1;
  for (std::size_t k = 0; k < header.size(); ++k) {
    if (header[k] == label_column) {
      label_idx = static_cast<std::ptrdiff_t>(k);
      break;
    }
  }
  if (label_idx < 0) {
    throw csv_error("label column '" + label_column + "' not found in header of '" + path + "'");
  }

  LoadedCsv out;
  out.label_name = label_column;
  for (std::size_t k = 0; k < header.size(); ++k) {
    if (static_cast<std::ptrdiff_t>(k) != label_idx) out.feature_names.push_back(header[k]);
  }

  std::vector<std::vector<double>> rows;
  std::vector<double> labels;
  std::size_t row_no = 1;
  while (std::getline(in, line)) {
    ++row_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_line(line);
    if (fields.size() != header.size()) {
      std::ostringstream msg;
      msg << "row " << row_no << ": expected " << header.size() << " fields, got "
          << fields.size();
      throw csv_error(msg.str());
    }
    std::vector<double> feat;
    feat.reserve(header.size() - 1);
    for (std::size_t k = 0; k < fields.size(); ++k) {
      const double v = parse_field(fields[k], row_no, header[k]);
      if (static_cast<std::ptrdiff_t>(k) == label_idx) {
        labels.push_back(v);
      } else {
        if (!std::isfinite(v)) {
          std::ostringstream msg;
          msg << "row " << row_no << ", column '" << header[k] << "': non-finite value";
          throw csv_error(msg.str());
        }
        feat.push_back(v);
      }
    }
    rows.push_back(std::move(feat));
  }
  if (rows.size() < 2) {
    throw csv_error("'" + path + "' needs at least two data rows");
  }

  bool has_zero = false;
  for (const double v : labels) {
    if (v == 0.0) {
      has_zero = true;
    } else if (v != 1.0 && v != -1.0) {
      throw csv_error("label column '" + label_column + "' must be coded {-1,1} or {0,1}");
    }
  }
  if (has_zero) {
    for (const double v : labels) {
      if (v == -1.0) {
        throw csv_error("label column '" + label_column + "' mixes -1 and 0 codes");
      }
    }
    out.remapped_zero_one = true;
  }

  const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index p = static_cast<Eigen::Index>(out.feature_names.size());
  if (p < 1) {
    throw csv_error("'" + path + "' has no feature columns");
  }
  Eigen::MatrixXd x(n, p);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < p; ++j) x(i, j) = rows[i][j];
    const double v = labels[i];
    y[i] = out.remapped_zero_one ? (v == 0.0 ? -1.0 : 1.0) : v;
  }
  out.data = make_dataset(std::move(x), std::move(y));
  return out;
}

void write_csv(const std::string& path, const Dataset& data,
               const std::vector<std::string>& feature_names, const std::string& label_name) {
  if (static_cast<Eigen::Index>(feature_names.size()) != data.p()) {
    throw std::invalid_argument("write_csv: feature name count mismatch");
  }
  std::ofstream outf(path);
  if (!outf) {
    throw csv_error("cannot write '" + path + "'");
  }
  for (const auto& name : feature_names) outf << name << ',';
  outf << label_name << '\n';
  for (Eigen::Index i = 0; i < data.n(); ++i) {
    for (Eigen::Index j = 0; j < data.p(); ++j) {
      outf << format_double(data.x(i, j)) << ',';
    }
    outf << (data.y[i] > 0 ? "1" : "-1") << '\n';
  }
}

}  // namespace bernsvm
