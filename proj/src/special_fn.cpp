#include "ys/special_fn.hpp"

#include <cmath>
#include <string>

namespace ys::special {
namespace {

constexpr double kAsymptoticThreshold = 10.0;

void require_positive(double x, const char* fn) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(fn) + ": argument must be finite and > 0, got " +
                      std::to_string(x));
  }
}

// ψ(x) − ln x + 1/(2x) for x ≥ 10, Bernoulli terms B_{2n}/(2n x^{2n}).
double digamma_asymptotic_tail(double x) {
  const double inv2 = 1.0 / (x * x);
  // Horner over powers of 1/x² with coefficients B_{2n}/(2n), n = 1..8.
  constexpr double c[] = {1.0 / 12.0,       -1.0 / 120.0,        1.0 / 252.0,
                          -1.0 / 240.0,     1.0 / 132.0,         -691.0 / 32760.0,
                          1.0 / 12.0,       -3617.0 / 8160.0};
  double poly = 0.0;
  for (int n = 7; n >= 0; --n) poly = poly * inv2 + c[n];
  return -poly * inv2;
}

// ψ₁(x) = 1/x + 1/(2x²) + Σ B_{2n}/x^{2n+1}, x ≥ 10.
double trigamma_asymptotic(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  constexpr double b[] = {1.0 / 6.0,  -1.0 / 30.0,     1.0 / 42.0, -1.0 / 30.0,
                          5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0,  -3617.0 / 510.0};
  double poly = 0.0;
  for (int n = 7; n >= 0; --n) poly = poly * inv2 + b[n];
  return inv + 0.5 * inv2 + poly * inv2 * inv;
}

// Stirling correction ln Γ(x) − [(x−½)ln x − x + ½ln 2π], x ≥ 100.
double stirling_correction(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  return inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 / 1680.0)));
}

// ln Γ(b+a) − ln Γ(b) for b ≥ 100 without forming the two large logs.
double log_gamma_increment(double a, double b) {
  return (b - 0.5) * std::log1p(a / b) + a * std::log(b + a) - a +
         (stirling_correction(b + a) - stirling_correction(b));
}

constexpr double kStirlingThreshold = 100.0;

}  // namespace

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  return std::lgamma(x);
}

double digamma(double x) {
  require_positive(x, "digamma");
  double shift = 0.0;
  while (x < kAsymptoticThreshold) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  return shift + std::log(x) - 0.5 / x + digamma_asymptotic_tail(x);
}

double trigamma(double x) {
  require_positive(x, "trigamma");
  double shift = 0.0;
  while (x < kAsymptoticThreshold) {
    shift += 1.0 / (x * x);
    x += 1.0;
  }
  return shift + trigamma_asymptotic(x);
}

double polygamma(PolygammaOrder order, double x) {
  return order == PolygammaOrder::digamma ? digamma(x) : trigamma(x);
}

double log_beta(double a, double b) {
  require_positive(a, "log_beta");
  require_positive(b, "log_beta");
  const double small = a < b ? a : b;
  const double large = a < b ? b : a;
  if (large >= kStirlingThreshold) {
    return std::lgamma(small) - log_gamma_increment(small, large);
  }
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

BetaLogMoments beta_log_moments(double alpha, double beta) {
  require_positive(alpha, "beta_log_moments");
  require_positive(beta, "beta_log_moments");
  return {digamma(alpha) - digamma(alpha + beta), trigamma(alpha) - trigamma(alpha + beta)};
}

double shifted_harmonic(double x, std::int64_t k) {
  CompensatedSum s;
  for (std::int64_t j = k; j >= 1; --j) s.add(1.0 / (x + static_cast<double>(j)));
  return s.value();
}

double shifted_harmonic2(double x, std::int64_t k) {
  CompensatedSum s;
  for (std::int64_t j = k; j >= 1; --j) {
    const double d = x + static_cast<double>(j);
    s.add(1.0 / (d * d));
  }
  return s.value();
}

}  // namespace ys::special
