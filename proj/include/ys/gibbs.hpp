#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "ys/count_sample.hpp"
#include "ys/rng.hpp"

namespace ys {

/// Sampler controls. Gamma prior with shape `prior_a`, rate `prior_b`; a = 0 is
/// an improper prior but the λ conditional stays proper for N ≥ 1.
struct GibbsConfig {
  double prior_a = 0.05;
  double prior_b = 0.25;
  int n_samples = 8000;
  int burn_in = 500;
  int thin = 1;
  RngStream seed{1, 0};
  double lambda_init = 1.0;
  int acf_lags = 100;

  void validate() const;
};

struct Autocorrelation {
  std::vector<double> values;  // lags 1..max_lag
  bool degenerate = false;     // zero-variance chain; values are all zero
};

struct GibbsResult {
  std::vector<double> raw_chain;  // every draw, burn-in included
  std::vector<double> chain;      // retained draws
  double posterior_mean = 0.0;
  double posterior_sd = 0.0;
  Autocorrelation autocorrelations;
};

/// Posterior sampler for λ over the mixture representation:
///   p_i | λ, k_i ~ Beta(λ+1, k_i),  w_i = −log p_i,
///   λ | w ~ Gamma(a + N, b + Σ w_i).
/// Retains draw burn_in + (m+1)·thin − 1 for m = 0..⌊(n_samples − burn_in)/thin⌋ − 1.
GibbsResult gibbs_run(const CountSample& data, const GibbsConfig& config);

/// One draw from Gamma(shape a + n, rate b + sum_w).
double conditional_lambda_draw(double sum_w, Count n, double prior_a, double prior_b,
                               RngStream& rng);

/// Σ_{i=1..multiplicity} −log p_i for iid p_i ~ Beta(alpha, k), integer k ≥ 1.
/// Uses −log Beta(α, k) =_d Σ_{j<k} E_j/(α+j), which aggregates over the
/// multiplicity into k Gamma(multiplicity, 1) draws when that is cheaper than
/// drawing each p_i from a pair of gammas.
double latent_log_sum_draw(Count k, Count multiplicity, double alpha, RngStream& rng);

/// Sample autocorrelation at lags 1..max_lag. Requires chain.size() > max_lag.
Autocorrelation autocorrelation(std::span<const double> chain, int max_lag);

/// CSV `iter,lambda` over retained draws; iter is the zero-based draw index in
/// the raw chain.
void write_chain_csv(std::ostream& out, const GibbsResult& result, const GibbsConfig& config);

}  // namespace ys
