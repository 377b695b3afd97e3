#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ys/em.hpp"
#include "ys/gibbs.hpp"
#include "ys/rng.hpp"

namespace ys {

enum class Generator { mixture, urn };
enum class Estimator { em, gibbs };

const char* to_string(Generator g);
const char* to_string(Estimator e);
Generator parse_generator(const std::string& name);
Estimator parse_estimator(const std::string& name);

/// One simulation cell: `n_rep` datasets of size `n` at `true_lambda`. For the
/// urn generator `n` is the number of arrivals. Replication r draws its data
/// from stream id r of `seed`, and its sampler from stream id r of a derived seed.
struct ExperimentSpec {
  double true_lambda = 1.0;
  std::size_t n = 500;
  int n_rep = 200;
  Generator generator = Generator::mixture;
  std::vector<Estimator> estimators{Estimator::em, Estimator::gibbs};
  RngStream seed{1, 0};
  FitConfig fit{};
  GibbsConfig gibbs{};
  unsigned threads = 1;

  void validate() const;
};

struct ReplicationRecord {
  int rep = 0;
  Estimator estimator = Estimator::em;
  double lambda_hat = 0.0;
  double se = 0.0;
  int iters = 0;
  std::string status;  // FitStatus name for EM, "ok" for Gibbs
};

struct Moments {
  double mean = 0.0;
  double median = 0.0;
  double p95 = 0.0;
  double sd = 0.0;
  std::size_t count = 0;
};

struct EstimatorSummary {
  Estimator estimator = Estimator::em;
  Moments lambda_hat;
  Moments se;
  double mean_iterations = 0.0;
  std::size_t successes = 0;
  std::size_t failures = 0;  // non-converged fits, excluded from the moments above
};

struct ExperimentSummary {
  std::vector<EstimatorSummary> estimators;
  std::vector<ReplicationRecord> records;  // ordered by (rep, estimator)
};

/// Mean, type-7 median and 95th percentile, and n−1 standard deviation.
Moments summarize(std::vector<double> values);

/// Linear-interpolation quantile of sorted data (Hyndman–Fan type 7).
double quantile_sorted(std::span<const double> sorted, double q);

/// Aggregates records as run_experiment does: only status "converged" (EM) or
/// "ok" (Gibbs) count as successes; SE moments skip non-finite SEs.
std::vector<EstimatorSummary> summarize_records(std::span<const ReplicationRecord> records,
                                                std::span<const Estimator> estimators);

/// The dataset replication `rep` of `spec` is fitted on.
CountSample replication_data(const ExperimentSpec& spec, int rep);

ExperimentSummary run_experiment(const ExperimentSpec& spec);

/// Header `rep,estimator,lambda_hat,se,iters,status`; doubles at 17 significant digits.
void write_replications_csv(std::ostream& out, std::span<const ReplicationRecord> records);
std::vector<ReplicationRecord> read_replications_csv(std::istream& in);

}  // namespace ys
