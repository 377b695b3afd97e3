#include "ys/convergence.hpp"

#include <cmath>
#include <stdexcept>

#include "ys/special_fn.hpp"

namespace ys {

double rate_theoretical(const CountSample& data, Lambda lambda) {
  const double l = lambda.value();
  return l * l * harmonic_sums(data, l).second / data.n();
}

double em_map_jacobian(const CountSample& data, Lambda lambda, double prior_a,
                       double prior_b) {
  const auto sums = harmonic_sums(data, lambda.value());
  const double denom = prior_b + sums.first;
  return (data.n() + prior_a - 1.0) * sums.second / (denom * denom);
}

EmpiricalRates empirical_rates(std::span<const double> trace,
                               std::optional<double> lambda_infinity) {
  if (trace.size() < 3) {
    throw std::length_error("empirical_rates: trace must hold at least 3 iterates");
  }
  EmpiricalRates out;
  auto push = [&](double num, double den, int index) {
    if (std::abs(den) < kRateDenominatorFloor) {
      out.truncated = true;
      return;
    }
    out.rates.push_back(num / den);
    out.iteration.push_back(index);
  };
  if (lambda_infinity) {
    const double lim = *lambda_infinity;
    for (std::size_t t = 1; t < trace.size(); ++t) {
      push(trace[t] - lim, trace[t - 1] - lim, static_cast<int>(t + 1));
    }
  } else {
    for (std::size_t t = 1; t + 1 < trace.size(); ++t) {
      push(trace[t + 1] - trace[t], trace[t] - trace[t - 1], static_cast<int>(t + 1));
    }
  }
  return out;
}

const char* to_string(Regime regime) {
  return regime == Regime::sublinear ? "sublinear" : "linear";
}

ConvergenceReport convergence_report(const CountSample& data, const FitResult& fit,
                                     const FitConfig& config,
                                     std::optional<double> lambda_infinity) {
  ConvergenceReport report;
  const Lambda hat(fit.lambda_hat);
  report.r_theoretical = rate_theoretical(data, hat);
  report.jacobian_at_hat = em_map_jacobian(data, hat, config.prior_a, config.prior_b);
  if (fit.trace.size() >= 3) report.empirical = empirical_rates(fit.trace, lambda_infinity);
  report.regime =
      report.r_theoretical > kSublinearThreshold ? Regime::sublinear : Regime::linear;
  return report;
}

}  // namespace ys
