#include "bernsvm/path.hpp"

#include <cmath>

#include "bernsvm/gcd.hpp"
#include "bernsvm/irls.hpp"
#include "bernsvm/lla.hpp"

namespace bernsvm {

double default_lambda_ratio(Eigen::Index n, Eigen::Index p) {
  return p > n ? 1e-2 : 1e-4;
}

LambdaGrid lambda_grid(const StandardizedDesign& design, const Eigen::VectorXd& y,
                       const LossSpec& loss, const PenaltySpec& penalty, int n_lambda,
                       double ratio) {
  if (n_lambda < 2) {
    throw std::invalid_argument("lambda_grid: n_lambda must be >= 2");
  }
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw std::invalid_argument("lambda_grid: ratio must lie in (0, 1)");
  }
  if (y.size() != design.n()) {
    throw std::invalid_argument("lambda_grid: label length mismatch");
  }
  const Eigen::Index n = design.n();
  const double inv_n = 1.0 / static_cast<double>(n);

  LambdaGrid grid;
  grid.null_intercept = null_intercept(y, loss);

  Eigen::VectorXd gy(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    gy[i] = loss.grad(y[i] * grid.null_intercept) * y[i];
  }
  const Eigen::VectorXd corr = design.x_std.transpose() * gy * inv_n;
  double lambda_max = 0.0;
  for (Eigen::Index j = 0; j < design.p(); ++j) {
    if (design.is_dropped(j)) continue;
    lambda_max = std::max(lambda_max, std::fabs(corr[j]) / penalty.weight(j));
  }
  if (!(lambda_max > 0.0)) {
    throw std::runtime_error("lambda_grid: null-model gradient vanishes; no l1 path exists");
  }

  grid.values.resize(n_lambda);
  const double log_max = std::log(lambda_max);
  const double log_ratio = std::log(ratio);
  for (int k = 0; k < n_lambda; ++k) {
    grid.values[k] =
        std::exp(log_max + log_ratio * static_cast<double>(k) / static_cast<double>(n_lambda - 1));
  }
  grid.values[0] = lambda_max;
  return grid;
}

PathResult fit_path(const StandardizedDesign& design, const Eigen::VectorXd& y,
                    const LossSpec& loss, const PenaltySpec& penalty,
                    const Eigen::VectorXd& lambdas, Engine engine, const SolverOptions& opts) {
  if (lambdas.size() < 1) {
    throw std::invalid_argument("fit_path: empty lambda sequence");
  }
  for (Eigen::Index k = 1; k < lambdas.size(); ++k) {
    if (!(lambdas[k] < lambdas[k - 1])) {
      throw std::invalid_argument("fit_path: lambdas must be strictly decreasing");
    }
  }
  PathResult out;
  out.lambdas = lambdas;
  out.null_intercept = null_intercept(y, loss);
  out.fits.reserve(static_cast<std::size_t>(lambdas.size()));
  out.nonzero_counts.reserve(static_cast<std::size_t>(lambdas.size()));

  WarmStart warm{out.null_intercept, Eigen::VectorXd::Zero(design.p())};
  for (Eigen::Index k = 0; k < lambdas.size(); ++k) {
    const PenaltySpec pk = penalty.with_lambda1(lambdas[k]);
    ModelFit fit;
    switch (pk.family()) {
      case PenaltyFamily::EN:
      case PenaltyFamily::AEN:
        fit = engine == Engine::GCD ? gcd_fit(design, y, loss, pk, opts, &warm)
                                    : irls_fit(design, y, loss, pk, opts, &warm);
        break;
      default:
        fit = lla_fit(design, y, loss, pk, opts, engine, 5, nullptr, &warm);
        break;
    }
    warm.beta0 = fit.beta0;
    warm.beta = fit.beta;
    out.nonzero_counts.push_back(static_cast<int>(fit.nonzero_count()));
    out.fits.push_back(std::move(fit));
  }
  return out;
}

}  // namespace bernsvm
