#include "ys/distribution.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ys/special_fn.hpp"

namespace ys {

Lambda::Lambda(double value) : value_(value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError("lambda must be finite and > 0, got " + std::to_string(value));
  }
}

double log_pmf(Count k, Lambda lambda) {
  if (k < 1) throw DomainError("log_pmf: k must be >= 1");
  const double l = lambda.value();
  return std::log(l) + special::log_beta(l + 1.0, static_cast<double>(k));
}

double pmf(Count k, Lambda lambda) { return std::exp(log_pmf(k, lambda)); }

double mean(Lambda lambda) {
  const double l = lambda.value();
  return l > 1.0 ? l / (l - 1.0) : std::numeric_limits<double>::infinity();
}

Count sample_geometric(double p, RngStream& rng) {
  if (!(p > 0.0)) return kMaxCount;
  if (p >= 1.0) return 1;
  const double log_q = std::log1p(-p);
  if (log_q == 0.0) return kMaxCount;
  const double k = std::ceil(std::log(rng.uniform()) / log_q);
  if (!(k < static_cast<double>(kMaxCount))) return kMaxCount;
  return k < 1.0 ? 1 : static_cast<Count>(k);
}

MixtureDraw sample_mixture(Lambda lambda, std::size_t n, RngStream& rng) {
  if (n < 1) throw DomainError("sample_mixture: n must be >= 1");
  std::vector<LatentDraw> latents;
  std::vector<Count> counts;
  latents.reserve(n);
  counts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = -std::log(rng.uniform()) / lambda.value();
    const double p = std::exp(-w);
    const Count k = sample_geometric(p, rng);
    latents.push_back({w, p, k});
    counts.push_back(k);
  }
  return {CountSample(std::move(counts)), std::move(latents)};
}

CountSample sample_urn_innovation(double alpha, Count total_items, RngStream& rng) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("sample_urn: innovation probability must lie in (0, 1)");
  }
  if (total_items < 1) throw DomainError("sample_urn: total_items must be >= 1");
  std::vector<std::uint32_t> owner;  // category of each arrival so far
  std::vector<Count> counts;
  owner.reserve(static_cast<std::size_t>(total_items));
  owner.push_back(0);
  counts.push_back(1);
  for (Count t = 1; t < total_items; ++t) {
    std::uint32_t category;
    if (rng.uniform() < alpha) {
      category = static_cast<std::uint32_t>(counts.size());
      counts.push_back(0);
    } else {
      const auto idx = static_cast<std::size_t>(rng.uniform() * static_cast<double>(t));
      category = owner[idx < owner.size() ? idx : owner.size() - 1];
    }
    ++counts[category];
    owner.push_back(category);
  }
  return CountSample(std::move(counts));
}

CountSample sample_urn(Lambda lambda, Count total_items, RngStream& rng) {
  if (!(lambda.value() > 1.0)) {
    throw DomainError("sample_urn: the urn process requires lambda > 1");
  }
  return sample_urn_innovation(1.0 - 1.0 / lambda.value(), total_items, rng);
}

BetaParams latent_posterior_params(Count k, Lambda lambda) {
  if (k < 1) throw DomainError("latent_posterior_params: k must be >= 1");
  return {lambda.value() + 1.0, static_cast<double>(k)};
}

}  // namespace ys
