#include "ys/count_sample.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "ys/special_fn.hpp"

namespace ys {

CountSample::CountSample(std::vector<Count> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) throw DomainError("CountSample: sample must be nonempty");
  std::map<Count, Count> histogram;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    const Count k = counts_[i];
    if (k < 1) {
      throw DomainError("CountSample: count at index " + std::to_string(i) +
                        " must be >= 1, got " + std::to_string(k));
    }
    ++histogram[k];
    total_ += static_cast<double>(k);
  }
  bins_.reserve(histogram.size());
  for (const auto& [value, mult] : histogram) bins_.push_back({value, mult});
}

namespace {

HarmonicSums finite_sums(const CountSample& data, double lambda) {
  // Σ_i Σ_{j≤k_i} f(j) = Σ_j f(j)·#{i : k_i ≥ j}; walk j once up to max k.
  special::CompensatedSum s1, s2;
  auto bins = data.bins();
  auto bin = bins.begin();
  double tail = data.n();
  const Count kmax = data.max();
  for (Count j = 1; j <= kmax; ++j) {
    const double inv = 1.0 / (lambda + static_cast<double>(j));
    s1.add(tail * inv);
    s2.add(tail * inv * inv);
    while (bin != bins.end() && bin->value == j) {
      tail -= static_cast<double>(bin->multiplicity);
      ++bin;
    }
  }
  return {s1.value(), s2.value()};
}

HarmonicSums polygamma_sums(const CountSample& data, double lambda) {
  special::CompensatedSum s1, s2;
  const double psi0 = special::digamma(lambda + 1.0);
  const double tri0 = special::trigamma(lambda + 1.0);
  for (const auto& bin : data.bins()) {
    const double m = static_cast<double>(bin.multiplicity);
    const double x = lambda + static_cast<double>(bin.value) + 1.0;
    s1.add(m * (special::digamma(x) - psi0));
    s2.add(m * (tri0 - special::trigamma(x)));
  }
  return {s1.value(), s2.value()};
}

}  // namespace

HarmonicSums harmonic_sums(const CountSample& data, double lambda, SumForm form) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw DomainError("harmonic_sums: lambda must be finite and >= 0");
  }
  if (form == SumForm::automatic) {
    form = data.total() < kFiniteSumBudget ? SumForm::finite_sum : SumForm::polygamma;
  }
  return form == SumForm::finite_sum ? finite_sums(data, lambda) : polygamma_sums(data, lambda);
}

}  // namespace ys
