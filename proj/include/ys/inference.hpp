#pragma once

#include "ys/count_sample.hpp"
#include "ys/distribution.hpp"

namespace ys {

struct InformationReport {
  double info_oakes = 0.0;
  double info_louis = 0.0;
  double variance = 0.0;  // 1 / info_oakes
  double std_err = 0.0;
  double info_numeric = 0.0;  // −ℓ''(λ̂) by Richardson-extrapolated central differences
  bool non_positive_information = false;  // λ̂ is not an interior maximum; variance is NaN
};

/// I_O = N/λ² − Σ_i Σ_{j≤k_i} 1/(λ+j)².
double oakes_information(const CountSample& data, Lambda lambda_hat);

/// Louis' missing-information form, built per observation from the Beta(λ+1, k_i)
/// log-moments:
///   I_L = N/λ² − Σ E(S_i²) − 2Σ_{i<j} E(S_i)E(S_j) + S*²,
/// with S_i = log p_i + 1/λ and S* = Σ E(S_i). S* vanishes at the MLE.
double louis_information(const CountSample& data, Lambda lambda_hat);

/// −d²/dλ² of observed_loglik, numerically.
double numeric_information(const CountSample& data, Lambda lambda);

InformationReport standard_error(const CountSample& data, Lambda lambda_hat);

}  // namespace ys
