#include "bernsvm/penalty.hpp"

namespace bernsvm {

const char* family_name(PenaltyFamily family) {
  switch (family) {
    case PenaltyFamily::EN: return "en";
    case PenaltyFamily::AEN: return "aen";
    case PenaltyFamily::SCADEN: return "scaden";
    case PenaltyFamily::MCPEN: return "mcpen";
  }
  return "?";
}

PenaltyFamily family_from_name(const std::string& name) {
  if (name == "en") return PenaltyFamily::EN;
  if (name == "aen") return PenaltyFamily::AEN;
  if (name == "scaden") return PenaltyFamily::SCADEN;
  if (name == "mcpen") return PenaltyFamily::MCPEN;
  throw std::invalid_argument("unknown penalty family: " + name);
}

PenaltySpec::PenaltySpec(PenaltyFamily family, double lambda1, double lambda2,
                         double a, Eigen::VectorXd weights)
    : family_(family),
      lambda1_(lambda1),
      lambda2_(lambda2),
      a_(a),
      weights_(std::move(weights)) {
  if (!(std::isfinite(lambda1_) && lambda1_ >= 0.0)) {
    throw std::invalid_argument("PenaltySpec: lambda1 must be >= 0");
  }
  if (!(std::isfinite(lambda2_) && lambda2_ >= 0.0)) {
    throw std::invalid_argument("PenaltySpec: lambda2 must be >= 0");
  }
}

PenaltySpec PenaltySpec::elastic_net(double lambda1, double lambda2) {
  return PenaltySpec(PenaltyFamily::EN, lambda1, lambda2, 0.0, {});
}

PenaltySpec PenaltySpec::adaptive(double lambda1, double lambda2, Eigen::VectorXd weights) {
  if (weights.size() == 0) {
    throw std::invalid_argument("adaptive penalty: weights are required");
  }
  for (Eigen::Index j = 0; j < weights.size(); ++j) {
    if (!(std::isfinite(weights[j]) && weights[j] > 0.0)) {
      throw std::invalid_argument("adaptive penalty: weights must be strictly positive");
    }
  }
  return PenaltySpec(PenaltyFamily::AEN, lambda1, lambda2, 0.0, std::move(weights));
}

PenaltySpec PenaltySpec::scad(double lambda1, double lambda2, double a) {
  if (!(std::isfinite(a) && a > 2.0)) {
    throw std::invalid_argument("scad penalty: a must be > 2");
  }
  return PenaltySpec(PenaltyFamily::SCADEN, lambda1, lambda2, a, {});
}

PenaltySpec PenaltySpec::mcp(double lambda1, double lambda2, double a) {
  if (!(std::isfinite(a) && a > 1.0)) {
    throw std::invalid_argument("mcp penalty: a must be > 1");
  }
  return PenaltySpec(PenaltyFamily::MCPEN, lambda1, lambda2, a, {});
}

PenaltySpec PenaltySpec::lla_subproblem(double lambda1, double lambda2,
                                        Eigen::VectorXd weights) {
  for (Eigen::Index j = 0; j < weights.size(); ++j) {
    if (!(std::isfinite(weights[j]) && weights[j] >= 0.0)) {
      throw std::invalid_argument("lla subproblem: weights must be >= 0");
    }
  }
  return PenaltySpec(PenaltyFamily::AEN, lambda1, lambda2, 0.0, std::move(weights));
}

PenaltySpec PenaltySpec::with_lambda1(double lambda1) const {
  PenaltySpec out = *this;
  if (!(std::isfinite(lambda1) && lambda1 >= 0.0)) {
    throw std::invalid_argument("with_lambda1: lambda1 must be >= 0");
  }
  out.lambda1_ = lambda1;
  return out;
}

namespace {

// Three-piece SCAD value: linear up to l, quadratic blend up to a*l, then flat.
double scad_value(double t, double l, double a) {
  if (t <= l) return l * t;
  if (t <= a * l) return (2.0 * a * l * t - t * t - l * l) / (2.0 * (a - 1.0));
  return (a + 1.0) * l * l / 2.0;
}

double mcp_value(double t, double l, double a) {
  if (t < a * l) return l * t - t * t / (2.0 * a);
  return a * l * l / 2.0;
}

}  // namespace

double penalty_value(const Eigen::VectorXd& beta, const PenaltySpec& spec) {
  if (spec.has_weights() && spec.weights().size() != beta.size()) {
    throw std::invalid_argument("penalty_value: weight/coefficient length mismatch");
  }
  double l1_part = 0.0;
  switch (spec.family()) {
    case PenaltyFamily::EN:
    case PenaltyFamily::AEN:
      for (Eigen::Index j = 0; j < beta.size(); ++j) {
        l1_part += spec.lambda1() * spec.weight(j) * std::fabs(beta[j]);
      }
      break;
    case PenaltyFamily::SCADEN:
      for (Eigen::Index j = 0; j < beta.size(); ++j) {
        l1_part += scad_value(std::fabs(beta[j]), spec.lambda1(), spec.a());
      }
      break;
    case PenaltyFamily::MCPEN:
      for (Eigen::Index j = 0; j < beta.size(); ++j) {
        l1_part += mcp_value(std::fabs(beta[j]), spec.lambda1(), spec.a());
      }
      break;
  }
  return l1_part + 0.5 * spec.lambda2() * beta.squaredNorm();
}

double nonconvex_deriv(double t, const PenaltySpec& spec) {
  if (!(std::isfinite(t) && t >= 0.0)) {
    throw std::invalid_argument("nonconvex_deriv: t must be >= 0");
  }
  const double l = spec.lambda1();
  const double a = spec.a();
  switch (spec.family()) {
    case PenaltyFamily::SCADEN:
      if (t <= l) return l;
      return std::max(a * l - t, 0.0) / (a - 1.0);
    case PenaltyFamily::MCPEN:
      return std::max(l - t / a, 0.0);
    default:
      throw std::invalid_argument("nonconvex_deriv: penalty family is convex");
  }
}

}  // namespace bernsvm
