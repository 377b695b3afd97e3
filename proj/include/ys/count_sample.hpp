#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ys {

using Count = std::int64_t;

/// Largest count a sampler will emit; counts stay exactly representable as doubles.
inline constexpr Count kMaxCount = Count{1} << 53;

struct CountBin {
  Count value;
  Count multiplicity;
};

/// Observed counts k_i ≥ 1, kept in input order alongside an ascending histogram
/// of distinct values (every per-observation sum in the fitters runs over bins).
class CountSample {
 public:
  explicit CountSample(std::vector<Count> counts);

  std::span<const Count> counts() const noexcept { return counts_; }
  std::span<const CountBin> bins() const noexcept { return bins_; }
  std::size_t size() const noexcept { return counts_.size(); }
  double n() const noexcept { return static_cast<double>(counts_.size()); }
  /// Σ k_i as a double (can exceed int64 for heavy-tailed samples).
  double total() const noexcept { return total_; }
  double mean() const noexcept { return total_ / n(); }
  Count max() const noexcept { return bins_.back().value; }

  friend bool operator==(const CountSample& a, const CountSample& b) {
    return a.counts_ == b.counts_;
  }

 private:
  std::vector<Count> counts_;
  std::vector<CountBin> bins_;
  double total_ = 0.0;
};

/// How the shifted harmonic sums over the data are evaluated. Both forms are
/// mathematically identical; `automatic` uses the finite sum while Σ k_i stays
/// below kFiniteSumBudget and the polygamma difference otherwise.
enum class SumForm { automatic, finite_sum, polygamma };

inline constexpr double kFiniteSumBudget = 1e6;

struct HarmonicSums {
  double first = 0.0;   // Σ_i Σ_{j=1..k_i} 1/(λ+j)
  double second = 0.0;  // Σ_i Σ_{j=1..k_i} 1/(λ+j)²
};

/// λ ≥ 0 (λ = 0 is legal: every term 1/(0+j) is finite).
HarmonicSums harmonic_sums(const CountSample& data, double lambda,
                           SumForm form = SumForm::automatic);

}  // namespace ys
