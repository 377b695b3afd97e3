#include "ys/report.hpp"

#include <algorithm>
#include <cmath>

namespace ys::report {

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

namespace {

Json numbers(const std::vector<double>& values) {
  Json arr = Json::array();
  for (double v : values) arr.push_back(number(v));
  return arr;
}

}  // namespace

Json to_json(const EmpiricalRates& rates) {
  Json j;
  j["iteration"] = rates.iteration;
  j["rate"] = numbers(rates.rates);
  j["truncated"] = rates.truncated;
  return j;
}

Json to_json(const ConvergenceReport& report) {
  Json j;
  j["r_theoretical"] = number(report.r_theoretical);
  j["jacobian_at_hat"] = number(report.jacobian_at_hat);
  j["empirical_rates"] = to_json(report.empirical);
  j["regime"] = to_string(report.regime);
  return j;
}

Json to_json(const InformationReport& report) {
  Json j;
  j["info_oakes"] = number(report.info_oakes);
  j["info_louis"] = number(report.info_louis);
  j["info_numeric"] = number(report.info_numeric);
  j["variance"] = number(report.variance);
  j["std_err"] = number(report.std_err);
  j["non_positive_information"] = report.non_positive_information;
  return j;
}

Json to_json(const Moments& m) {
  Json j;
  j["mean"] = number(m.mean);
  j["median"] = number(m.median);
  j["p95"] = number(m.p95);
  j["sd"] = number(m.sd);
  j["count"] = m.count;
  return j;
}

Json to_json(const EstimatorSummary& s) {
  Json j;
  j["estimator"] = to_string(s.estimator);
  j["lambda_hat"] = to_json(s.lambda_hat);
  j["se"] = to_json(s.se);
  j["mean_iterations"] = number(s.mean_iterations);
  j["successes"] = s.successes;
  j["failures"] = s.failures;
  return j;
}

Json fit_report(const FitResult& fit, const InformationReport* info,
                const ConvergenceReport& convergence) {
  Json j;
  j["lambda_hat"] = number(fit.lambda_hat);
  j["std_err"] = info ? number(info->std_err) : Json(nullptr);
  j["iterations"] = fit.iterations;
  j["status"] = to_string(fit.status);
  j["trace"] = numbers(fit.trace);
  j["convergence"] = to_json(convergence);
  j["loglik_trace"] = numbers(fit.loglik_trace);
  j["information"] = info ? to_json(*info) : Json(nullptr);
  j["warnings"] = fit.warnings;
  return j;
}

Json gibbs_report(const GibbsResult& result, const GibbsConfig& config,
                  const std::string& chain_file) {
  Json j;
  j["posterior_mean"] = number(result.posterior_mean);
  j["posterior_sd"] = number(result.posterior_sd);
  j["n_retained"] = result.chain.size();
  double acf_max = 0.0;
  for (double a : result.autocorrelations.values) acf_max = std::max(acf_max, std::abs(a));
  j["acf_max"] = number(acf_max);
  j["acf_degenerate"] = result.autocorrelations.degenerate;
  j["autocorrelations"] = numbers(result.autocorrelations.values);
  j["chain_file"] = chain_file.empty() ? Json(nullptr) : Json(chain_file);
  Json cfg;
  cfg["prior_a"] = config.prior_a;
  cfg["prior_b"] = config.prior_b;
  cfg["n_samples"] = config.n_samples;
  cfg["burn_in"] = config.burn_in;
  cfg["thin"] = config.thin;
  cfg["seed"] = config.seed.seed();
  cfg["stream"] = config.seed.stream_id();
  cfg["lambda_init"] = config.lambda_init;
  j["config"] = cfg;
  return j;
}

Json experiment_report(const ExperimentSpec& spec, const ExperimentSummary& summary) {
  Json j;
  Json s;
  s["true_lambda"] = spec.true_lambda;
  s["n"] = spec.n;
  s["n_rep"] = spec.n_rep;
  s["generator"] = to_string(spec.generator);
  Json ests = Json::array();
  for (Estimator e : spec.estimators) ests.push_back(to_string(e));
  s["estimators"] = ests;
  s["seed"] = spec.seed.seed();
  j["spec"] = s;
  Json out = Json::array();
  for (const auto& e : summary.estimators) out.push_back(to_json(e));
  j["summary"] = out;
  return j;
}

Json corpus_report(const corpus::CorpusCounts& counts) {
  Json j;
  j["n_unique"] = counts.n_unique;
  j["n_tokens"] = counts.n_tokens;
  Json pre;
  pre["gutenberg_stripped"] = counts.preprocessing.gutenberg_stripped;
  pre["lowercase"] = counts.preprocessing.tokenizer.lowercase;
  pre["keep_apostrophes"] = counts.preprocessing.tokenizer.keep_apostrophes;
  pre["keep_digits"] = counts.preprocessing.tokenizer.keep_digits;
  pre["warnings"] = counts.preprocessing.warnings;
  j["preprocessing"] = pre;
  return j;
}

}  // namespace ys::report
