#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bernsvm/data.hpp"

namespace bernsvm {

enum class Scenario { S1, S2, S3 };

Scenario scenario_from_name(const std::string& name);
const char* scenario_name(Scenario s);

struct ScenarioConfig {
  Scenario scenario = Scenario::S1;
  Eigen::Index n = 100;
  Eigen::Index p = 5000;
  double rho = 0.5;          // compound-symmetry correlation, in [0, 1)
  double snr = 3.0;          // S1/S2 signal-to-noise target
  double xi = 0.3;           // S3 active fraction
  double target_prob = 0.3;  // S3 marginal P(y = +1)
  std::uint64_t seed = 1;
};

struct SimulatedData {
  Dataset data;
  Eigen::VectorXd beta_true;
  double beta0_true = 0.0;
  std::vector<Eigen::Index> active_set;
};

// beta' Sigma beta for the compound-symmetry Sigma = (1-rho) I + rho 11'.
double compound_quadratic(const Eigen::VectorXd& beta, double rho);

// Draws the three benchmark designs. Rows are sqrt(rho) g 1 + sqrt(1-rho) e
// with a shared scalar g per row, which reproduces the compound-symmetry
// correlation exactly. S1 uses the alternating-decay coefficients on the
// first 50 coordinates, S2 the uniform block pattern, S3 a random sparse
// pattern of size floor(p xi) with the intercept calibrated by bisection so
// the marginal P(y = +1) hits target_prob. Responses pass a linear score
// through the inverse logit; Bernoulli success maps to +1.
//
// Draw order for a given seed: coefficients, then (S3) 1e5 calibration
// normals, then X row by row (g first, then the p residuals), then (S1/S2)
// the n score noises, then the n label uniforms.
SimulatedData generate(const ScenarioConfig& config);

// CSV + JSON truth sidecar in the formats the data loader and bench harness
// consume. Features are named x1..xp, labels live in column `y`.
void write_simulated(const std::string& csv_path, const std::string& truth_path,
                     const SimulatedData& sim, const ScenarioConfig& config);

}  // namespace bernsvm
