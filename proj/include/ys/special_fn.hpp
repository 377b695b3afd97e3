#pragma once

#include <cstdint>
#include <stdexcept>

namespace ys {

/// Raised when an argument lies outside the domain of a function or model.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace special {

enum class PolygammaOrder { digamma = 0, trigamma = 1 };

/// ln Γ(x) for finite x > 0.
double log_gamma(double x);

/// ψ(x) = d/dx ln Γ(x). Shifts the argument upward with ψ(x) = ψ(x+1) − 1/x
/// and finishes with the asymptotic expansion.
double digamma(double x);

/// ψ₁(x) = d/dx ψ(x), same strategy as digamma with ψ₁(x) = ψ₁(x+1) + 1/x².
double trigamma(double x);

double polygamma(PolygammaOrder order, double x);

/// ln B(a, b).
double log_beta(double a, double b);

struct BetaLogMoments {
  double mean_log;  // E[log p]
  double var_log;   // Var[log p]
};

/// Moments of log p for p ~ Beta(alpha, beta). E[(log p)²] is
/// var_log + mean_log².
BetaLogMoments beta_log_moments(double alpha, double beta);

/// Σ_{j=1..k} 1/(x+j), compensated summation. Equals ψ(x+k+1) − ψ(x+1).
double shifted_harmonic(double x, std::int64_t k);

/// Σ_{j=1..k} 1/(x+j)². Equals ψ₁(x+1) − ψ₁(x+k+1).
double shifted_harmonic2(double x, std::int64_t k);

/// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if ((sum_ >= 0 ? sum_ : -sum_) >= (v >= 0 ? v : -v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace special
}  // namespace ys
