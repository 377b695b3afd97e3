#include "ys/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ys/distribution.hpp"
#include "ys/inference.hpp"
#include "ys/special_fn.hpp"

namespace ys {
namespace {

constexpr std::uint64_t kGibbsSalt = 0x6769626273ULL;  // "gibbs"

struct Replication {
  std::vector<ReplicationRecord> records;
};

Replication run_replication(const ExperimentSpec& spec, int rep) {
  const CountSample data = replication_data(spec, rep);

  Replication out;
  for (Estimator est : spec.estimators) {
    ReplicationRecord rec;
    rec.rep = rep;
    rec.estimator = est;
    if (est == Estimator::em) {
      const FitResult fit = em_fit(data, spec.fit);
      rec.lambda_hat = fit.lambda_hat;
      rec.iters = fit.iterations;
      rec.status = to_string(fit.status);
      rec.se = fit.status == FitStatus::converged
                   ? standard_error(data, Lambda(fit.lambda_hat)).std_err
                   : std::numeric_limits<double>::quiet_NaN();
    } else {
      GibbsConfig cfg = spec.gibbs;
      cfg.seed = RngStream(spec.seed.derive(kGibbsSalt).seed(), static_cast<std::uint64_t>(rep));
      cfg.acf_lags = 0;
      const GibbsResult res = gibbs_run(data, cfg);
      rec.lambda_hat = res.posterior_mean;
      rec.se = res.posterior_sd;
      rec.iters = cfg.n_samples;
      rec.status = "ok";
    }
    out.records.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

CountSample replication_data(const ExperimentSpec& spec, int rep) {
  RngStream data_rng(spec.seed.seed(), static_cast<std::uint64_t>(rep));
  const Lambda truth(spec.true_lambda);
  return spec.generator == Generator::mixture
             ? sample_mixture(truth, spec.n, data_rng).sample
             : sample_urn(truth, static_cast<Count>(spec.n), data_rng);
}

const char* to_string(Generator g) { return g == Generator::urn ? "urn" : "mixture"; }
const char* to_string(Estimator e) { return e == Estimator::gibbs ? "gibbs" : "em"; }

Generator parse_generator(const std::string& name) {
  if (name == "mixture") return Generator::mixture;
  if (name == "urn") return Generator::urn;
  throw std::invalid_argument("unknown generator '" + name + "'");
}

Estimator parse_estimator(const std::string& name) {
  if (name == "em") return Estimator::em;
  if (name == "gibbs") return Estimator::gibbs;
  throw std::invalid_argument("unknown estimator '" + name + "'");
}

void ExperimentSpec::validate() const {
  Lambda check(true_lambda);
  if (n < 1) throw DomainError("ExperimentSpec: n must be >= 1");
  if (n_rep < 1) throw DomainError("ExperimentSpec: n_rep must be >= 1");
  if (generator == Generator::urn && !(true_lambda > 1.0)) {
    throw DomainError("ExperimentSpec: the urn generator requires lambda > 1");
  }
  if (estimators.empty()) throw DomainError("ExperimentSpec: no estimators selected");
  fit.validate();
  gibbs.validate();
}

double quantile_sorted(std::span<const double> sorted, double q) {
  if (sorted.empty()) return std::numeric_limits<double>::quiet_NaN();
  const double h = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

Moments summarize(std::vector<double> values) {
  Moments m;
  m.count = values.size();
  if (values.empty()) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    m.mean = m.median = m.p95 = m.sd = nan;
    return m;
  }
  std::sort(values.begin(), values.end());
  special::CompensatedSum s;
  for (double v : values) s.add(v);
  m.mean = s.value() / static_cast<double>(values.size());
  special::CompensatedSum ss;
  for (double v : values) ss.add((v - m.mean) * (v - m.mean));
  m.sd = values.size() > 1 ? std::sqrt(ss.value() / static_cast<double>(values.size() - 1)) : 0.0;
  m.median = quantile_sorted(values, 0.5);
  m.p95 = quantile_sorted(values, 0.95);
  return m;
}

std::vector<EstimatorSummary> summarize_records(std::span<const ReplicationRecord> records,
                                                std::span<const Estimator> estimators) {
  std::vector<EstimatorSummary> out;
  for (Estimator est : estimators) {
    EstimatorSummary summary;
    summary.estimator = est;
    std::vector<double> lambdas, ses;
    double iter_sum = 0.0;
    for (const auto& rec : records) {
      if (rec.estimator != est) continue;
      const bool ok = rec.status == "converged" || rec.status == "ok";
      if (!ok) {
        ++summary.failures;
        continue;
      }
      ++summary.successes;
      lambdas.push_back(rec.lambda_hat);
      if (std::isfinite(rec.se)) ses.push_back(rec.se);
      iter_sum += rec.iters;
    }
    summary.lambda_hat = summarize(std::move(lambdas));
    summary.se = summarize(std::move(ses));
    summary.mean_iterations = summary.successes > 0
                                  ? iter_sum / static_cast<double>(summary.successes)
                                  : std::numeric_limits<double>::quiet_NaN();
    out.push_back(summary);
  }
  return out;
}

ExperimentSummary run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  std::vector<Replication> reps(static_cast<std::size_t>(spec.n_rep));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int r = next++; r < spec.n_rep; r = next++) {
      reps[static_cast<std::size_t>(r)] = run_replication(spec, r);
    }
  };
  const unsigned n_threads =
      std::clamp<unsigned>(spec.threads, 1u, static_cast<unsigned>(spec.n_rep));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }

  ExperimentSummary summary;
  for (auto& rep : reps) {
    for (auto& rec : rep.records) summary.records.push_back(std::move(rec));
  }
  summary.estimators = summarize_records(summary.records, spec.estimators);
  return summary;
}

void write_replications_csv(std::ostream& out, std::span<const ReplicationRecord> records) {
  out << "rep,estimator,lambda_hat,se,iters,status\n";
  const auto old = out.precision(17);
  for (const auto& r : records) {
    out << r.rep << ',' << to_string(r.estimator) << ',' << r.lambda_hat << ',' << r.se << ','
        << r.iters << ',' << r.status << '\n';
  }
  out.precision(old);
}

std::vector<ReplicationRecord> read_replications_csv(std::istream& in) {
  std::vector<ReplicationRecord> records;
  std::string line;
  if (!std::getline(in, line) || line != "rep,estimator,lambda_hat,se,iters,status") {
    throw std::runtime_error("replication CSV: unexpected header");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 6) throw std::runtime_error("replication CSV: bad row '" + line + "'");
    ReplicationRecord rec;
    rec.rep = std::stoi(fields[0]);
    rec.estimator = parse_estimator(fields[1]);
    rec.lambda_hat = std::stod(fields[2]);
    rec.se = fields[3] == "nan" || fields[3] == "-nan" ? std::numeric_limits<double>::quiet_NaN()
                                                        : std::stod(fields[3]);
    rec.iters = std::stoi(fields[4]);
    rec.status = fields[5];
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace ys
