#pragma once

// Test-only reference computations. Nothing here calls into the fitting code
// paths it is used to check.

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "ys/count_sample.hpp"

namespace ys::test {

/// Golden-section maximization of a unimodal function on [lo, hi].
inline double golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                                 double tol = 1e-11) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol * std::max(1.0, std::abs(c))) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

/// Log-likelihood written out with the product expansion
/// ln λ − Σ_{j≤k} ln(λ+j) + ln Γ(k); the Γ(k) term is λ-free and dropped.
inline double loglik_by_products(const CountSample& data, double lambda) {
  double total = 0.0;
  for (Count k : data.counts()) {
    double s = std::log(lambda);
    for (Count j = 1; j <= k; ++j) s -= std::log(lambda + static_cast<double>(j));
    total += s;
  }
  return total;
}

/// loglik_by_products in extended precision, for finite differences of a flat maximum.
inline long double loglik_by_products_extended(const CountSample& data, long double lambda) {
  long double total = 0.0L;
  for (Count k : data.counts()) {
    long double s = std::log(lambda);
    for (Count j = 1; j <= k; ++j) s -= std::log(lambda + static_cast<long double>(j));
    total += s;
  }
  return total;
}

/// Richardson-extrapolated central second difference.
inline double second_derivative(const std::function<double(double)>& f, double x, double h) {
  auto d2 = [&](double step) { return (f(x + step) - 2.0 * f(x) + f(x - step)) / (step * step); };
  return (4.0 * d2(0.5 * h) - d2(h)) / 3.0;
}

/// Richardson-extrapolated central first difference.
inline double first_derivative(const std::function<double(double)>& f, double x, double h) {
  auto d1 = [&](double step) { return (f(x + step) - f(x - step)) / (2.0 * step); };
  return (4.0 * d1(0.5 * h) - d1(h)) / 3.0;
}

/// Brute-force double sum Σ_i Σ_{j≤k_i} (λ+j)^{-power}.
inline double brute_double_sum(const CountSample& data, double lambda, int power) {
  double total = 0.0;
  for (Count k : data.counts()) {
    for (Count j = 1; j <= k; ++j) total += std::pow(lambda + static_cast<double>(j), -power);
  }
  return total;
}

/// Asymptotic Kolmogorov critical value for the one-sample KS statistic at level alpha.
inline double ks_critical(double alpha, std::size_t n) {
  return std::sqrt(-0.5 * std::log(alpha / 2.0)) / std::sqrt(static_cast<double>(n));
}

}  // namespace ys::test
