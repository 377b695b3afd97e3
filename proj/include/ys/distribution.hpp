#pragma once

#include <vector>

#include "ys/count_sample.hpp"
#include "ys/rng.hpp"

namespace ys {

/// The Yule–Simon parameter λ: finite and strictly positive.
class Lambda {
 public:
  explicit Lambda(double value);
  double value() const noexcept { return value_; }

 private:
  double value_;
};

/// One draw of the mixture hierarchy w ~ Exp(λ), p = e^{-w}, k ~ Geometric(p).
struct LatentDraw {
  double w;
  double p;
  Count k;
};

struct MixtureDraw {
  CountSample sample;
  std::vector<LatentDraw> latents;
};

struct BetaParams {
  double alpha;
  double beta;
};

/// ln g(k|λ) = ln λ + ln B(λ+1, k).
double log_pmf(Count k, Lambda lambda);
double pmf(Count k, Lambda lambda);

/// λ/(λ−1) for λ > 1, +infinity otherwise.
double mean(Lambda lambda);

/// Geometric on {1, 2, ...} with success probability p, by inversion.
/// Results are capped at kMaxCount.
Count sample_geometric(double p, RngStream& rng);

/// n draws from the mixture representation. p is drawn from Beta(λ, 1) as
/// U^{1/λ} (computed through w = −ln U / λ).
MixtureDraw sample_mixture(Lambda lambda, std::size_t n, RngStream& rng);

/// Simon's preferential-attachment process over `total_items` arrivals. Each
/// arrival after the first opens a new category with probability α = 1 − 1/λ,
/// otherwise it copies the category of a uniformly chosen earlier arrival.
/// Requires λ > 1. Returns per-category counts in order of creation.
CountSample sample_urn(Lambda lambda, Count total_items, RngStream& rng);

/// Same process parameterized directly by the innovation probability α ∈ (0, 1).
CountSample sample_urn_innovation(double alpha, Count total_items, RngStream& rng);

/// Parameters of the conditional law h(p | k, λ) = Beta(λ+1, k).
BetaParams latent_posterior_params(Count k, Lambda lambda);

}  // namespace ys
