#pragma once

#include <json.hpp>

#include "ys/convergence.hpp"
#include "ys/corpus.hpp"
#include "ys/em.hpp"
#include "ys/experiment.hpp"
#include "ys/gibbs.hpp"
#include "ys/inference.hpp"

namespace ys::report {

using Json = nlohmann::ordered_json;

/// Non-finite doubles become null.
Json number(double v);

Json to_json(const EmpiricalRates& rates);
Json to_json(const ConvergenceReport& report);
Json to_json(const InformationReport& report);
Json to_json(const Moments& moments);
Json to_json(const EstimatorSummary& summary);

/// {lambda_hat, std_err, iterations, status, trace, convergence, ...}
Json fit_report(const FitResult& fit, const InformationReport* info,
                const ConvergenceReport& convergence);

/// {posterior_mean, posterior_sd, n_retained, acf_max, chain_file?, ...}
Json gibbs_report(const GibbsResult& result, const GibbsConfig& config,
                  const std::string& chain_file);

Json experiment_report(const ExperimentSpec& spec, const ExperimentSummary& summary);

Json corpus_report(const corpus::CorpusCounts& counts);

}  // namespace ys::report
