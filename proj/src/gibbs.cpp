#include "ys/gibbs.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "ys/special_fn.hpp"

namespace ys {

void GibbsConfig::validate() const {
  if (!(prior_a >= 0.0) || !(prior_b >= 0.0)) {
    throw DomainError("GibbsConfig: prior a and b must be >= 0");
  }
  if (burn_in < 0) throw DomainError("GibbsConfig: burn_in must be >= 0");
  if (n_samples <= burn_in) throw DomainError("GibbsConfig: n_samples must exceed burn_in");
  if (thin < 1) throw DomainError("GibbsConfig: thin must be >= 1");
  if (!(lambda_init > 0.0) || !std::isfinite(lambda_init)) {
    throw DomainError("GibbsConfig: lambda_init must be finite and > 0");
  }
  if (acf_lags < 0) throw DomainError("GibbsConfig: acf_lags must be >= 0");
}

double conditional_lambda_draw(double sum_w, Count n, double prior_a, double prior_b,
                               RngStream& rng) {
  if (!(sum_w > 0.0)) throw DomainError("conditional_lambda_draw: sum_w must be > 0");
  if (n < 1) throw DomainError("conditional_lambda_draw: n must be >= 1");
  return rng.gamma(prior_a + static_cast<double>(n), prior_b + sum_w);
}

double latent_log_sum_draw(Count k, Count multiplicity, double alpha, RngStream& rng) {
  special::CompensatedSum total;
  if (k <= 2 * multiplicity) {
    const double shape = static_cast<double>(multiplicity);
    for (Count j = 0; j < k; ++j) {
      total.add(rng.gamma(shape, 1.0) / (alpha + static_cast<double>(j)));
    }
  } else {
    const double kd = static_cast<double>(k);
    for (Count i = 0; i < multiplicity; ++i) {
      // p = X/(X+Y) with X ~ Gamma(α), Y ~ Gamma(k); −log p = log1p(Y/X).
      const double x = rng.gamma(alpha, 1.0);
      const double y = rng.gamma(kd, 1.0);
      total.add(std::log1p(y / x));
    }
  }
  return total.value();
}

Autocorrelation autocorrelation(std::span<const double> chain, int max_lag) {
  if (max_lag < 0 || chain.size() <= static_cast<std::size_t>(max_lag)) {
    throw std::length_error("autocorrelation: chain must be longer than max_lag");
  }
  const std::size_t n = chain.size();
  special::CompensatedSum s;
  for (double x : chain) s.add(x);
  const double mu = s.value() / static_cast<double>(n);
  std::vector<double> centered(n);
  double c0 = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    centered[t] = chain[t] - mu;
    c0 += centered[t] * centered[t];
  }
  Autocorrelation out;
  out.values.assign(static_cast<std::size_t>(max_lag), 0.0);
  if (!(c0 > 0.0)) {
    out.degenerate = true;
    return out;
  }
  for (int lag = 1; lag <= max_lag; ++lag) {
    double c = 0.0;
    for (std::size_t t = 0; t + static_cast<std::size_t>(lag) < n; ++t) {
      c += centered[t] * centered[t + static_cast<std::size_t>(lag)];
    }
    out.values[static_cast<std::size_t>(lag - 1)] = c / c0;
  }
  return out;
}

GibbsResult gibbs_run(const CountSample& data, const GibbsConfig& config) {
  config.validate();
  RngStream rng = config.seed;
  const auto n = static_cast<Count>(data.size());
  GibbsResult result;
  result.raw_chain.reserve(static_cast<std::size_t>(config.n_samples));
  double lambda = config.lambda_init;
  for (int s = 0; s < config.n_samples; ++s) {
    special::CompensatedSum sum_w;
    for (const auto& bin : data.bins()) {
      sum_w.add(latent_log_sum_draw(bin.value, bin.multiplicity, lambda + 1.0, rng));
    }
    lambda = conditional_lambda_draw(sum_w.value(), n, config.prior_a, config.prior_b, rng);
    result.raw_chain.push_back(lambda);
  }

  const int retained = (config.n_samples - config.burn_in) / config.thin;
  result.chain.reserve(static_cast<std::size_t>(retained));
  for (int m = 0; m < retained; ++m) {
    result.chain.push_back(
        result.raw_chain[static_cast<std::size_t>(config.burn_in + (m + 1) * config.thin - 1)]);
  }

  special::CompensatedSum s;
  for (double x : result.chain) s.add(x);
  const double count = static_cast<double>(result.chain.size());
  result.posterior_mean = s.value() / count;
  special::CompensatedSum ss;
  for (double x : result.chain) ss.add((x - result.posterior_mean) * (x - result.posterior_mean));
  result.posterior_sd = result.chain.size() > 1 ? std::sqrt(ss.value() / (count - 1.0)) : 0.0;

  const int lags = std::min<int>(config.acf_lags, static_cast<int>(result.chain.size()) - 1);
  result.autocorrelations = autocorrelation(result.chain, std::max(lags, 0));
  return result;
}

void write_chain_csv(std::ostream& out, const GibbsResult& result, const GibbsConfig& config) {
  out << "iter,lambda\n";
  out.precision(17);
  for (std::size_t m = 0; m < result.chain.size(); ++m) {
    out << config.burn_in + (static_cast<int>(m) + 1) * config.thin - 1 << ','
        << result.chain[m] << '\n';
  }
}

}  // namespace ys
