// ys: command-line front end for fitting and simulating Yule–Simon count data.
//
//   ys fit FILE          EM fit, standard error and convergence report (JSON)
//   ys gibbs FILE        posterior summary from the Gibbs sampler (JSON)
//   ys simulate          write a synthetic count-sample file
//   ys text FILE         word-frequency counts from a plain-text book
//   ys diagnose FILE     fit plus plot-ready convergence/likelihood data (JSON)
//   ys experiment        replicated simulation study (JSON summary + CSV)
//
// Exit codes: 0 success/converged, 1 usage, I/O or format error, 2 diverging
// fit, 3 fit stopped at max_iter.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ys/convergence.hpp"
#include "ys/corpus.hpp"
#include "ys/distribution.hpp"
#include "ys/em.hpp"
#include "ys/experiment.hpp"
#include "ys/gibbs.hpp"
#include "ys/inference.hpp"
#include "ys/report.hpp"
#include "ys/sample_io.hpp"

namespace {

using ys::report::Json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("YS_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("YS_SEED is not an unsigned integer: ") + env);
    }
  }
  return 1;
}

struct FitOptions {
  double prior_a = 1.0;
  double prior_b = 0.0;
  double tol = 1e-6;
  int max_iter = 500;
  std::string init = "mode";
  double lambda0 = 1.0;
  double ceiling = 1e6;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--prior-a", prior_a, "gamma prior shape a (1 with b=0 is plain ML)");
    cmd->add_option("--prior-b", prior_b, "gamma prior rate b");
    cmd->add_option("--tol", tol, "stop when |lambda change| < tol");
    cmd->add_option("--max-iter", max_iter, "maximum EM updates");
    cmd->add_option("--init", init, "initialization: mode | mom | fixed")
        ->check(CLI::IsMember({"mode", "mom", "fixed"}));
    cmd->add_option("--lambda0", lambda0, "starting value for --init fixed");
    cmd->add_option("--ceiling", ceiling, "divergence ceiling on lambda");
  }

  ys::FitConfig config() const {
    ys::FitConfig c;
    c.prior_a = prior_a;
    c.prior_b = prior_b;
    c.tol = tol;
    c.max_iter = max_iter;
    c.divergence_ceiling = ceiling;
    if (init == "mom") {
      c.init = ys::InitPolicy::method_of_moments();
    } else if (init == "fixed") {
      c.init = ys::InitPolicy::fixed(lambda0);
    }
    return c;
  }
};

int fit_exit_code(ys::FitStatus status) {
  switch (status) {
    case ys::FitStatus::converged: return 0;
    case ys::FitStatus::diverging: return 2;
    case ys::FitStatus::max_iter_reached: return 3;
  }
  return 1;
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

int run_fit(const std::string& file, const FitOptions& opts,
            std::optional<double> lambda_infinity, int grid_points, bool diagnose) {
  const ys::CountSample data = ys::io::read_count_sample_file(file);
  const ys::FitConfig config = opts.config();
  const ys::FitResult fit = ys::em_fit(data, config);
  const ys::Lambda hat(fit.lambda_hat);

  std::optional<ys::InformationReport> info;
  if (fit.status == ys::FitStatus::converged) info = ys::standard_error(data, hat);
  const ys::ConvergenceReport conv = ys::convergence_report(data, fit, config);
  Json j = ys::report::fit_report(fit, info ? &*info : nullptr, conv);

  if (diagnose) {
    if (lambda_infinity && fit.trace.size() >= 3) {
      j["convergence"]["empirical_rates_known_limit"] =
          ys::report::to_json(ys::empirical_rates(fit.trace, lambda_infinity));
    }
    const auto convexity = ys::convexity_check(data, hat);
    j["convexity"] = {{"second_derivative", ys::report::number(convexity.second_derivative)},
                      {"within_certified_interval", convexity.within_certified_interval},
                      {"certified_bound", ys::kCertifiedConcavityBound}};
    // Log-likelihood over a window around λ̂ for plotting the iterates against it.
    Json curve = Json::array();
    const double lo = std::max(1e-3, 0.5 * std::min(fit.lambda_hat, fit.trace.front()));
    const double hi = 1.5 * std::max(fit.lambda_hat, std::max(fit.trace.front(), 1e-3));
    for (int g = 0; g < grid_points; ++g) {
      const double l = lo + (hi - lo) * g / std::max(1, grid_points - 1);
      curve.push_back({{"lambda", l},
                       {"loglik", ys::report::number(ys::observed_loglik(data, ys::Lambda(l)))}});
    }
    j["loglik_curve"] = curve;
    j["n"] = data.size();
  }
  print(j);
  return fit_exit_code(fit.status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Yule-Simon estimation: EM/MAP fits, standard errors, Gibbs sampling"};
  app.require_subcommand(1);

  // fit / diagnose
  std::string fit_file;
  FitOptions fit_opts;
  auto* fit_cmd = app.add_subcommand("fit", "EM fit of a count-sample file");
  fit_cmd->add_option("file", fit_file, "count-sample file")->required();
  fit_opts.add_to(fit_cmd);

  std::string diag_file;
  FitOptions diag_opts;
  std::optional<double> lambda_infinity;
  int grid_points = 50;
  auto* diag_cmd = app.add_subcommand("diagnose", "fit plus plot-ready diagnostics");
  diag_cmd->add_option("file", diag_file, "count-sample file")->required();
  diag_opts.add_to(diag_cmd);
  diag_cmd->add_option("--lambda-infinity", lambda_infinity,
                       "known limit for the (lambda_t - lim)/(lambda_t-1 - lim) rates");
  diag_cmd->add_option("--grid-points", grid_points, "points on the log-likelihood curve")
      ->check(CLI::Range(2, 100000));

  // gibbs
  std::string gibbs_file;
  ys::GibbsConfig gibbs_cfg;
  std::optional<std::uint64_t> gibbs_seed;
  std::uint64_t gibbs_stream = 0;
  std::string chain_out;
  auto* gibbs_cmd = app.add_subcommand("gibbs", "Gibbs sampler for the posterior of lambda");
  gibbs_cmd->add_option("file", gibbs_file, "count-sample file")->required();
  gibbs_cmd->add_option("--n-samples", gibbs_cfg.n_samples, "total draws");
  gibbs_cmd->add_option("--burn-in", gibbs_cfg.burn_in, "discarded initial draws");
  gibbs_cmd->add_option("--thin", gibbs_cfg.thin, "keep every thin-th draw");
  gibbs_cmd->add_option("--prior-a", gibbs_cfg.prior_a, "gamma prior shape");
  gibbs_cmd->add_option("--prior-b", gibbs_cfg.prior_b, "gamma prior rate");
  gibbs_cmd->add_option("--lambda-init", gibbs_cfg.lambda_init, "chain start");
  gibbs_cmd->add_option("--acf-lags", gibbs_cfg.acf_lags, "autocorrelation lags");
  gibbs_cmd->add_option("--seed", gibbs_seed, "seed (default $YS_SEED or 1)");
  gibbs_cmd->add_option("--stream", gibbs_stream, "stream id");
  gibbs_cmd->add_option("--chain-out", chain_out, "write retained draws as CSV iter,lambda");

  // simulate
  double sim_lambda = 1.25;
  std::size_t sim_n = 500;
  std::string sim_generator = "mixture";
  std::optional<std::uint64_t> sim_seed;
  std::uint64_t sim_stream = 0;
  std::string sim_out = "-";
  auto* sim_cmd = app.add_subcommand("simulate", "generate Yule-Simon counts");
  sim_cmd->add_option("--lambda", sim_lambda, "true lambda")->required();
  sim_cmd->add_option("--n", sim_n, "sample size (urn: number of arrivals)")->required();
  sim_cmd->add_option("--generator", sim_generator, "mixture | urn")
      ->check(CLI::IsMember({"mixture", "urn"}));
  sim_cmd->add_option("--seed", sim_seed, "seed (default $YS_SEED or 1)");
  sim_cmd->add_option("--stream", sim_stream, "stream id");
  sim_cmd->add_option("--out", sim_out, "output file, - for stdout");

  // text
  std::string text_file, text_out, text_tsv;
  bool no_strip = false;
  ys::corpus::TokenizerOptions tok;
  auto* text_cmd = app.add_subcommand("text", "word-frequency counts from a text file");
  text_cmd->add_option("file", text_file, "plain-text input")->required();
  text_cmd->add_option("--out", text_out, "count-sample output file")->required();
  text_cmd->add_option("--tsv", text_tsv, "optional word<TAB>count output");
  text_cmd->add_flag("--no-strip", no_strip, "keep Gutenberg header/footer");
  text_cmd->add_flag("--keep-apostrophes", tok.keep_apostrophes, "join words across ' and ’");
  text_cmd->add_flag("--keep-digits", tok.keep_digits, "treat digits as word characters");

  // experiment
  ys::ExperimentSpec spec;
  spec.estimators = {ys::Estimator::em};
  std::vector<std::string> estimator_names{"em"};
  std::string exp_generator = "mixture";
  std::optional<std::uint64_t> exp_seed;
  std::string csv_out;
  auto* exp_cmd = app.add_subcommand("experiment", "replicated simulation study");
  exp_cmd->add_option("--lambda", spec.true_lambda, "true lambda")->required();
  exp_cmd->add_option("--n", spec.n, "sample size")->required();
  exp_cmd->add_option("--reps", spec.n_rep, "replications");
  exp_cmd->add_option("--generator", exp_generator, "mixture | urn")
      ->check(CLI::IsMember({"mixture", "urn"}));
  exp_cmd->add_option("--estimators", estimator_names, "em and/or gibbs")->delimiter(',');
  exp_cmd->add_option("--seed", exp_seed, "seed (default $YS_SEED or 1)");
  exp_cmd->add_option("--threads", spec.threads, "worker threads");
  exp_cmd->add_option("--gibbs-samples", spec.gibbs.n_samples, "Gibbs draws per replication");
  exp_cmd->add_option("--gibbs-burn-in", spec.gibbs.burn_in, "Gibbs burn-in");
  exp_cmd->add_option("--csv", csv_out, "per-replication CSV output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*fit_cmd) return run_fit(fit_file, fit_opts, std::nullopt, 0, false);
    if (*diag_cmd) return run_fit(diag_file, diag_opts, lambda_infinity, grid_points, true);

    if (*gibbs_cmd) {
      const ys::CountSample data = ys::io::read_count_sample_file(gibbs_file);
      gibbs_cfg.seed = ys::RngStream(gibbs_seed.value_or(default_seed()), gibbs_stream);
      const ys::GibbsResult res = ys::gibbs_run(data, gibbs_cfg);
      if (!chain_out.empty()) {
        std::ofstream out(chain_out);
        if (!out) throw std::runtime_error("cannot write " + chain_out);
        ys::write_chain_csv(out, res, gibbs_cfg);
      }
      print(ys::report::gibbs_report(res, gibbs_cfg, chain_out));
      return 0;
    }

    if (*sim_cmd) {
      ys::RngStream rng(sim_seed.value_or(default_seed()), sim_stream);
      const ys::Lambda lambda(sim_lambda);
      if (sim_generator == "urn" && !(sim_lambda > 1.0)) {
        throw UsageError("the urn generator requires --lambda > 1");
      }
      const ys::CountSample sample =
          sim_generator == "urn" ? ys::sample_urn(lambda, static_cast<ys::Count>(sim_n), rng)
                                 : ys::sample_mixture(lambda, sim_n, rng).sample;
      if (sim_out == "-") {
        ys::io::write_count_sample(std::cout, sample);
      } else {
        ys::io::write_count_sample_file(sim_out, sample);
      }
      std::cerr << "n=" << sample.size() << " mean=" << sample.mean() << " max=" << sample.max()
                << '\n';
      return 0;
    }

    if (*text_cmd) {
      std::ifstream in(text_file, std::ios::binary);
      if (!in) throw std::runtime_error("cannot open " + text_file);
      std::stringstream buffer;
      buffer << in.rdbuf();
      const auto counts = ys::corpus::process_text(buffer.str(), !no_strip, tok);
      ys::io::write_count_sample_file(text_out, ys::corpus::to_count_sample(counts));
      if (!text_tsv.empty()) {
        std::ofstream tsv(text_tsv, std::ios::binary);
        if (!tsv) throw std::runtime_error("cannot write " + text_tsv);
        ys::corpus::write_vocabulary_tsv(tsv, counts);
      }
      print(ys::report::corpus_report(counts));
      return 0;
    }

    if (*exp_cmd) {
      spec.generator = ys::parse_generator(exp_generator);
      spec.estimators.clear();
      for (const auto& name : estimator_names) spec.estimators.push_back(ys::parse_estimator(name));
      spec.seed = ys::RngStream(exp_seed.value_or(default_seed()), 0);
      if (spec.generator == ys::Generator::urn && !(spec.true_lambda > 1.0)) {
        throw UsageError("the urn generator requires --lambda > 1");
      }
      const auto summary = ys::run_experiment(spec);
      if (!csv_out.empty()) {
        std::ofstream csv(csv_out);
        if (!csv) throw std::runtime_error("cannot write " + csv_out);
        ys::write_replications_csv(csv, summary.records);
      }
      print(ys::report::experiment_report(spec, summary));
      return 0;
    }
  } catch (const ys::io::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
