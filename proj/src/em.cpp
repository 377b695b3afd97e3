#include "ys/em.hpp"

#include <cmath>
#include <limits>

#include "ys/special_fn.hpp"

namespace ys {

void FitConfig::validate() const {
  if (!(prior_a >= 0.0) || !(prior_b >= 0.0)) {
    throw DomainError("FitConfig: prior a and b must be >= 0");
  }
  if (!(tol > 0.0)) throw DomainError("FitConfig: tol must be > 0");
  if (max_iter < 1) throw DomainError("FitConfig: max_iter must be >= 1");
  if (!(divergence_ceiling > 0.0)) throw DomainError("FitConfig: ceiling must be > 0");
  if (init.kind == InitKind::fixed && !(init.value >= 0.0 && std::isfinite(init.value))) {
    throw DomainError("FitConfig: fixed initial lambda must be finite and >= 0");
  }
}

const char* to_string(FitStatus status) {
  switch (status) {
    case FitStatus::converged: return "converged";
    case FitStatus::max_iter_reached: return "max_iter_reached";
    case FitStatus::diverging: return "diverging";
  }
  return "unknown";
}

double observed_loglik(const CountSample& data, Lambda lambda) {
  special::CompensatedSum s;
  for (const auto& bin : data.bins()) {
    s.add(static_cast<double>(bin.multiplicity) * log_pmf(bin.value, lambda));
  }
  return s.value();
}

double q_function(Lambda lambda, Lambda lambda_prev, const CountSample& data) {
  using special::digamma;
  const double l = lambda.value();
  const double lp = lambda_prev.value();
  const double psi0 = digamma(lp + 1.0);
  special::CompensatedSum linear, constant;
  for (const auto& bin : data.bins()) {
    const double m = static_cast<double>(bin.multiplicity);
    const double k = static_cast<double>(bin.value);
    const double psik = digamma(lp + 1.0 + k);
    linear.add(m * (psi0 - psik));
    constant.add(m * (k - 1.0) * (digamma(k) - psik));
  }
  return l * linear.value() + constant.value() + data.n() * std::log(l);
}

double em_step(double lambda_prev, const CountSample& data, double prior_a, double prior_b,
               SumForm form) {
  const double numerator = data.n() + prior_a - 1.0;
  if (!(numerator > 0.0)) {
    throw DomainError("em_step: N + a - 1 must be > 0");
  }
  if (!(lambda_prev >= 0.0) || !std::isfinite(lambda_prev)) {
    throw DomainError("em_step: previous lambda must be finite and >= 0");
  }
  return numerator / (prior_b + harmonic_sums(data, lambda_prev, form).first);
}

double em_step_digamma(double lambda_prev, const CountSample& data) {
  if (!(lambda_prev >= 0.0) || !std::isfinite(lambda_prev)) {
    throw DomainError("em_step_digamma: previous lambda must be finite and >= 0");
  }
  const double psi0 = special::digamma(lambda_prev + 1.0);
  special::CompensatedSum denom;
  for (const auto& bin : data.bins()) {
    const double x = lambda_prev + 1.0 + static_cast<double>(bin.value);
    denom.add(static_cast<double>(bin.multiplicity) * (special::digamma(x) - psi0));
  }
  return data.n() / denom.value();
}

InitValue init_lambda(const CountSample& data, const InitPolicy& policy) {
  switch (policy.kind) {
    case InitKind::fixed:
      return {policy.value, std::nullopt};
    case InitKind::mode_one:
      return {1.0, std::nullopt};
    case InitKind::method_of_moments: {
      const double kbar = data.mean();
      if (!(kbar > 1.0) || !std::isfinite(kbar)) {
        return {1.0, "method_of_moments undefined for mean count " + std::to_string(kbar) +
                         "; falling back to lambda0 = 1"};
      }
      return {kbar / (kbar - 1.0), std::nullopt};
    }
  }
  return {1.0, std::nullopt};
}

namespace {

double loglik_or_ninf(const CountSample& data, double lambda) {
  return lambda > 0.0 ? observed_loglik(data, Lambda(lambda))
                      : -std::numeric_limits<double>::infinity();
}

}  // namespace

FitResult em_fit(const CountSample& data, const FitConfig& config) {
  config.validate();
  FitResult result;
  const InitValue start = init_lambda(data, config.init);
  if (start.warning) result.warnings.push_back(*start.warning);

  double current = start.lambda;
  result.trace.push_back(current);
  result.loglik_trace.push_back(loglik_or_ninf(data, current));
  result.lambda_hat = current;

  if (!(data.n() + config.prior_a - 1.0 > 0.0)) {
    result.status = FitStatus::diverging;
    result.warnings.push_back("N + a - 1 <= 0: the update is degenerate");
    return result;
  }

  // All-ones data under a prior that does not penalize large λ: the objective
  // N ln(λ/(λ+1)) + (a−1) ln λ increases without bound and the iteration only
  // creeps upward by about one unit per step.
  if (data.max() == 1 && config.prior_b == 0.0 && config.prior_a >= 1.0) {
    result.status = FitStatus::diverging;
    result.warnings.push_back("all counts equal 1: the likelihood has no interior maximum");
    return result;
  }

  result.status = FitStatus::max_iter_reached;
  for (int it = 1; it <= config.max_iter; ++it) {
    const double next =
        em_step(current, data, config.prior_a, config.prior_b, config.sum_form);
    result.iterations = it;
    result.trace.push_back(next);
    result.loglik_trace.push_back(observed_loglik(data, Lambda(next)));
    result.lambda_hat = next;
    if (next > config.divergence_ceiling) {
      result.status = FitStatus::diverging;
      result.warnings.push_back("lambda exceeded the divergence ceiling; the likelihood has "
                                "no interior maximum");
      break;
    }
    if (std::abs(next - current) < config.tol) {
      result.status = FitStatus::converged;
      break;
    }
    current = next;
  }
  return result;
}

ConvexityCheck convexity_check(const CountSample& data, Lambda lambda) {
  const double l = lambda.value();
  const double second = harmonic_sums(data, l).second - data.n() / (l * l);
  return {second, l < kCertifiedConcavityBound};
}

}  // namespace ys
