#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ys/count_sample.hpp"
#include "ys/distribution.hpp"
#include "ys/em.hpp"

namespace ys {

/// Missing-to-complete information ratio λ² Σ_i Σ_{j≤k_i} 1/(λ+j)² / N.
double rate_theoretical(const CountSample& data, Lambda lambda);

/// dM/dλ of the update M(λ) = (N+a−1)/(b + Σ_i Σ_j 1/(λ+j)):
/// (N+a−1) Σ_i Σ_j (λ+j)^{-2} / (b + Σ_i Σ_j (λ+j)^{-1})².
double em_map_jacobian(const CountSample& data, Lambda lambda, double prior_a = 1.0,
                       double prior_b = 0.0);

/// Empirical per-iteration rates from an EM trace. Without a limit:
///   r^(t+1) = (λ^(t+1) − λ^(t)) / (λ^(t) − λ^(t−1)),  t = 1..T−1.
/// With a known limit λ∞:
///   r^(t+1) = (λ^(t) − λ∞) / (λ^(t−1) − λ∞),          t = 1..T.
/// Entries whose denominator falls below 1e-14 in magnitude are omitted and
/// `truncated` is set.
struct EmpiricalRates {
  std::vector<double> rates;
  std::vector<int> iteration;  // the t+1 index of each rate
  bool truncated = false;
};

inline constexpr double kRateDenominatorFloor = 1e-14;

EmpiricalRates empirical_rates(std::span<const double> trace,
                               std::optional<double> lambda_infinity = std::nullopt);

enum class Regime { linear, sublinear };

inline constexpr double kSublinearThreshold = 0.9;

const char* to_string(Regime regime);

struct ConvergenceReport {
  double r_theoretical = 0.0;
  double jacobian_at_hat = 0.0;
  EmpiricalRates empirical;
  Regime regime = Regime::linear;
};

/// Rates evaluated at the fitted λ̂ plus the empirical sequence of its trace.
ConvergenceReport convergence_report(const CountSample& data, const FitResult& fit,
                                     const FitConfig& config,
                                     std::optional<double> lambda_infinity = std::nullopt);

}  // namespace ys
