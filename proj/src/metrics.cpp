#include "bernsvm/metrics.hpp"

#include <sstream>

#include "bernsvm/csv.hpp"

namespace bernsvm {

Eigen::VectorXd predict(double beta0, const Eigen::VectorXd& beta, const Eigen::MatrixXd& x) {
  if (x.cols() != beta.size()) {
    throw std::invalid_argument("predict: dimension mismatch");
  }
  const Eigen::VectorXd f = (x * beta).array() + beta0;
  Eigen::VectorXd labels(f.size());
  for (Eigen::Index i = 0; i < f.size(); ++i) labels[i] = f[i] >= 0.0 ? 1.0 : -1.0;
  return labels;
}

Eigen::VectorXd predict(const ModelFit& fit, const Eigen::MatrixXd& x) {
  return predict(fit.beta0, fit.beta, x);
}

ClassificationReport classification_report(const Eigen::VectorXd& y_true,
                                           const Eigen::VectorXd& y_pred) {
  if (y_true.size() != y_pred.size()) {
    throw std::invalid_argument("classification_report: length mismatch");
  }
  for (Eigen::Index i = 0; i < y_true.size(); ++i) {
    if ((y_true[i] != 1.0 && y_true[i] != -1.0) || (y_pred[i] != 1.0 && y_pred[i] != -1.0)) {
      throw std::invalid_argument("classification_report: labels must be -1 or +1");
    }
  }
  const double n = static_cast<double>(y_true.size());
  Eigen::Index err_pos = 0, err_neg = 0;
  for (Eigen::Index i = 0; i < y_true.size(); ++i) {
    if (y_true[i] == y_pred[i]) continue;
    (y_true[i] > 0 ? err_pos : err_neg) += 1;
  }
  ClassificationReport rep;
  rep.n_test = y_true.size();
  rep.mr = static_cast<double>(err_pos + err_neg) / n;
  rep.se = 1.0 - static_cast<double>(err_pos) / n;
  rep.sp = 1.0 - static_cast<double>(err_neg) / n;
  return rep;
}

SelectionReport selection_report(const Eigen::VectorXd& beta_true,
                                 const Eigen::VectorXd& beta_hat) {
  if (beta_true.size() != beta_hat.size()) {
    throw std::invalid_argument("selection_report: length mismatch");
  }
  Eigen::Index both = 0, selected = 0, active = 0;
  for (Eigen::Index j = 0; j < beta_true.size(); ++j) {
    const bool t = beta_true[j] != 0.0;
    const bool h = beta_hat[j] != 0.0;
    both += t && h;
    selected += h;
    active += t;
  }
  SelectionReport rep;
  if (selected > 0) rep.pr = static_cast<double>(both) / static_cast<double>(selected);
  if (active > 0) rep.rc = static_cast<double>(both) / static_cast<double>(active);
  return rep;
}

PerfReport make_perf_report(const ClassificationReport& cls, const SelectionReport& sel) {
  PerfReport rep;
  rep.mr = cls.mr;
  rep.se = cls.se;
  rep.sp = cls.sp;
  rep.pr = sel.pr;
  rep.rc = sel.rc;
  rep.n_test = cls.n_test;
  return rep;
}

namespace {

std::string opt_str(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string("NA");
}

}  // namespace

std::string PerfReport::to_kv() const {
  std::ostringstream out;
  out << "mr " << format_double(mr) << '\n'
      << "se " << format_double(se) << '\n'
      << "sp " << format_double(sp) << '\n'
      << "pr " << opt_str(pr) << '\n'
      << "rc " << opt_str(rc) << '\n'
      << "n_test " << n_test << '\n';
  return out.str();
}

std::string PerfReport::csv_header() { return "mr,se,sp,pr,rc,n_test"; }

std::string PerfReport::csv_row() const {
  std::ostringstream out;
  out << format_double(mr) << ',' << format_double(se) << ',' << format_double(sp) << ','
      << opt_str(pr) << ',' << opt_str(rc) << ',' << n_test;
  return out.str();
}

}  // namespace bernsvm
