#include "ys/inference.hpp"

#include <cmath>
#include <limits>

#include "ys/em.hpp"
#include "ys/special_fn.hpp"

namespace ys {

double oakes_information(const CountSample& data, Lambda lambda_hat) {
  const double l = lambda_hat.value();
  return data.n() / (l * l) - harmonic_sums(data, l).second;
}

double louis_information(const CountSample& data, Lambda lambda_hat) {
  const double l = lambda_hat.value();
  const double inv = 1.0 / l;
  special::CompensatedSum sum_es2;    // Σ E(S_i²)
  special::CompensatedSum sum_es;     // Σ E(S_i) = S*
  special::CompensatedSum sum_es_sq;  // Σ E(S_i)²
  for (const auto& bin : data.bins()) {
    const double m = static_cast<double>(bin.multiplicity);
    const auto [mean_log, var_log] =
        special::beta_log_moments(l + 1.0, static_cast<double>(bin.value));
    const double es = inv + mean_log;
    sum_es2.add(m * (var_log + mean_log * mean_log + inv * inv + 2.0 * mean_log * inv));
    sum_es.add(m * es);
    sum_es_sq.add(m * es * es);
  }
  const double score = sum_es.value();
  // 2Σ_{i<j} E(S_i)E(S_j) via the square of the sum.
  const double cross = score * score - sum_es_sq.value();
  const double complete = data.n() * inv * inv;
  return complete - sum_es2.value() - cross + score * score;
}

double numeric_information(const CountSample& data, Lambda lambda) {
  const double l = lambda.value();
  const double h = 1e-2 * l;
  auto second_difference = [&](double step) {
    const double f0 = observed_loglik(data, lambda);
    const double fp = observed_loglik(data, Lambda(l + step));
    const double fm = observed_loglik(data, Lambda(l - step));
    return (fp - 2.0 * f0 + fm) / (step * step);
  };
  const double coarse = second_difference(h);
  const double fine = second_difference(0.5 * h);
  return -(4.0 * fine - coarse) / 3.0;
}

InformationReport standard_error(const CountSample& data, Lambda lambda_hat) {
  InformationReport report;
  report.info_oakes = oakes_information(data, lambda_hat);
  report.info_louis = louis_information(data, lambda_hat);
  report.info_numeric = numeric_information(data, lambda_hat);
  if (report.info_oakes > 0.0) {
    report.variance = 1.0 / report.info_oakes;
    report.std_err = std::sqrt(report.variance);
  } else {
    report.non_positive_information = true;
    report.variance = std::numeric_limits<double>::quiet_NaN();
    report.std_err = std::numeric_limits<double>::quiet_NaN();
  }
  return report;
}

}  // namespace ys
