#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "ys/count_sample.hpp"
#include "ys/distribution.hpp"

namespace ys {

enum class InitKind { fixed, method_of_moments, mode_one };

struct InitPolicy {
  InitKind kind = InitKind::mode_one;
  double value = 1.0;  // used by InitKind::fixed

  static InitPolicy fixed(double lambda0) { return {InitKind::fixed, lambda0}; }
  static InitPolicy method_of_moments() { return {InitKind::method_of_moments, 0.0}; }
  static InitPolicy mode_one() { return {InitKind::mode_one, 1.0}; }
};

/// Controls for the EM/MAP iteration. The gamma prior has shape `prior_a` and
/// rate `prior_b`; a = 1, b = 0 is plain maximum likelihood.
struct FitConfig {
  double prior_a = 1.0;
  double prior_b = 0.0;
  double tol = 1e-6;
  int max_iter = 500;
  InitPolicy init{};
  double divergence_ceiling = 1e6;
  SumForm sum_form = SumForm::automatic;

  void validate() const;
};

enum class FitStatus { converged, max_iter_reached, diverging };

const char* to_string(FitStatus status);

struct FitResult {
  double lambda_hat = 0.0;
  int iterations = 0;
  std::vector<double> trace;         // λ^(0), ..., λ^(iterations)
  std::vector<double> loglik_trace;  // observed log-likelihood along the trace
  FitStatus status = FitStatus::max_iter_reached;
  std::vector<std::string> warnings;
};

struct InitValue {
  double lambda;
  std::optional<std::string> warning;
};

struct ConvexityCheck {
  double second_derivative;
  bool within_certified_interval;
};

/// Upper end of the interval 0 < λ < √6/π on which every observation's
/// log-likelihood is concave (Σ_j 1/(λ+j)² < π²/6 < 1/λ²).
inline const double kCertifiedConcavityBound = std::sqrt(6.0) / std::numbers::pi;

/// Σ_i ln g(k_i|λ).
double observed_loglik(const CountSample& data, Lambda lambda);

/// Q(λ | λ') = Nλψ(λ'+1) − λΣψ(λ'+1+k_i) + Σ(k_i−1)[ψ(k_i) − ψ(λ'+1+k_i)] + N ln λ.
double q_function(Lambda lambda, Lambda lambda_prev, const CountSample& data);

/// One EM/MAP update: (N + a − 1) / (b + Σ_i Σ_{j≤k_i} 1/(λ'+j)).
/// Throws DomainError when N + a − 1 ≤ 0 or λ' < 0.
double em_step(double lambda_prev, const CountSample& data, double prior_a = 1.0,
               double prior_b = 0.0, SumForm form = SumForm::automatic);

/// The likelihood update written through digamma differences,
/// N / Σ_i (ψ(λ'+1+k_i) − ψ(λ'+1)). Independent of the finite-sum path.
double em_step_digamma(double lambda_prev, const CountSample& data);

InitValue init_lambda(const CountSample& data, const InitPolicy& policy);

/// Iterate em_step from the configured start until |Δλ| < tol, the ceiling is
/// exceeded (status diverging) or max_iter updates have been made. Never throws
/// for degenerate data; that case is reported as diverging.
FitResult em_fit(const CountSample& data, const FitConfig& config = {});

/// Σ_i [−1/λ² + Σ_{j≤k_i} 1/(λ+j)²] and whether λ lies in the certified interval.
ConvexityCheck convexity_check(const CountSample& data, Lambda lambda);

}  // namespace ys
