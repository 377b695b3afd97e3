#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "ys/distribution.hpp"
#include "ys/experiment.hpp"
#include "ys/rng.hpp"
#include "ys/sample_io.hpp"
#include "ys/special_fn.hpp"

using ys::CountSample;
using ys::Lambda;

namespace {

ys::io::FormatError read_error(const std::string& text) {
  std::istringstream in(text);
  try {
    ys::io::read_count_sample(in);
  } catch (const ys::io::FormatError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for input: " << text;
  return ys::io::FormatError("", 0);
}

ys::ExperimentSpec small_spec() {
  ys::ExperimentSpec spec;
  spec.true_lambda = 1.2;
  spec.n = 200;
  spec.n_rep = 6;
  spec.seed = ys::RngStream(99, 0);
  spec.gibbs.n_samples = 300;
  spec.gibbs.burn_in = 50;
  spec.gibbs.acf_lags = 10;
  return spec;
}

}  // namespace

TEST(SampleIo, RoundTrip) {
  const CountSample s({4, 1, 1, 9, 2});
  std::stringstream buf;
  ys::io::write_count_sample(buf, s);
  EXPECT_EQ(buf.str(), "4\n1\n1\n9\n2\n");
  EXPECT_TRUE(ys::io::read_count_sample(buf) == s);
}

TEST(SampleIo, ToleratesCrlf) {
  std::istringstream in("3\r\n1\r\n");
  EXPECT_TRUE(ys::io::read_count_sample(in) == CountSample({3, 1}));
}

TEST(SampleIo, ErrorsCarryLineNumbers) {
  const auto zero = read_error("3\n1\n0\n2\n");
  EXPECT_EQ(zero.line(), 3u);
  EXPECT_NE(std::string(zero.what()).find("line 3"), std::string::npos);
  EXPECT_EQ(read_error("1\nx\n").line(), 2u);
  EXPECT_EQ(read_error("1\n2.5\n").line(), 2u);
  EXPECT_EQ(read_error("-4\n").line(), 1u);
  EXPECT_EQ(read_error("7 8\n").line(), 1u);
  EXPECT_EQ(read_error("").line(), 0u);
}

TEST(Moments, SummaryStatistics) {
  const auto m = ys::summarize({4.0, 1.0, 3.0, 2.0, 5.0});
  EXPECT_DOUBLE_EQ(m.mean, 3.0);
  EXPECT_DOUBLE_EQ(m.median, 3.0);
  EXPECT_DOUBLE_EQ(m.p95, 4.8);
  EXPECT_DOUBLE_EQ(m.sd, std::sqrt(2.5));
  EXPECT_EQ(m.count, 5u);
  const std::vector<double> sorted{1.0, 2.0};
  EXPECT_DOUBLE_EQ(ys::quantile_sorted(sorted, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(ys::quantile_sorted(sorted, 0.5), 1.5);
  EXPECT_DOUBLE_EQ(ys::quantile_sorted(sorted, 1.0), 2.0);
}

TEST(Urn, RejectsLambdaAtMostOne) {
  ys::RngStream rng(1, 0);
  EXPECT_THROW(ys::sample_urn(Lambda(0.8), 100, rng), ys::DomainError);
  EXPECT_THROW(ys::sample_urn(Lambda(1.0), 100, rng), ys::DomainError);
  const auto s = ys::sample_urn(Lambda(2.0), 1000, rng);
  EXPECT_EQ(s.total(), 1000.0);
}

TEST(Names, ParseAndPrint) {
  EXPECT_EQ(ys::parse_generator("urn"), ys::Generator::urn);
  EXPECT_STREQ(ys::to_string(ys::Generator::mixture), "mixture");
  EXPECT_EQ(ys::parse_estimator("gibbs"), ys::Estimator::gibbs);
  EXPECT_THROW(ys::parse_estimator("newton"), std::invalid_argument);
}

TEST(Experiment, SpecValidation) {
  auto spec = small_spec();
  spec.n_rep = 0;
  EXPECT_ANY_THROW(spec.validate());
  spec = small_spec();
  spec.generator = ys::Generator::urn;
  spec.true_lambda = 0.9;
  EXPECT_ANY_THROW(spec.validate());
  spec = small_spec();
  spec.estimators.clear();
  EXPECT_ANY_THROW(spec.validate());
}

TEST(Experiment, IndependentOfThreadCount) {
  auto spec = small_spec();
  spec.threads = 1;
  const auto one = ys::run_experiment(spec);
  spec.threads = 3;
  const auto three = ys::run_experiment(spec);
  std::ostringstream a, b;
  ys::write_replications_csv(a, one.records);
  ys::write_replications_csv(b, three.records);
  EXPECT_EQ(a.str(), b.str());
  ASSERT_EQ(one.records.size(), 12u);
  EXPECT_EQ(one.records[0].rep, 0);
  EXPECT_EQ(one.records[1].estimator, ys::Estimator::gibbs);
}

TEST(Experiment, SummaryRecomputableFromCsv) {
  const auto summary = ys::run_experiment(small_spec());
  std::stringstream csv;
  ys::write_replications_csv(csv, summary.records);
  const auto records = ys::read_replications_csv(csv);
  ASSERT_EQ(records.size(), summary.records.size());
  const std::vector<ys::Estimator> estimators{ys::Estimator::em, ys::Estimator::gibbs};
  const auto again = ys::summarize_records(records, estimators);
  ASSERT_EQ(again.size(), summary.estimators.size());
  for (std::size_t e = 0; e < again.size(); ++e) {
    EXPECT_EQ(again[e].lambda_hat.mean, summary.estimators[e].lambda_hat.mean);
    EXPECT_EQ(again[e].lambda_hat.p95, summary.estimators[e].lambda_hat.p95);
    EXPECT_EQ(again[e].se.mean, summary.estimators[e].se.mean);
    EXPECT_EQ(again[e].mean_iterations, summary.estimators[e].mean_iterations);
    EXPECT_EQ(again[e].successes, summary.estimators[e].successes);
  }
}

TEST(Experiment, FailuresExcludedFromMoments) {
  std::vector<ys::ReplicationRecord> records{
      {0, ys::Estimator::em, 1.0, 0.1, 10, "converged"},
      {1, ys::Estimator::em, 1e6, NAN, 3, "diverging"},
      {2, ys::Estimator::em, 3.0, 0.3, 12, "converged"},
  };
  const std::vector<ys::Estimator> estimators{ys::Estimator::em};
  const auto s = ys::summarize_records(records, estimators);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].successes, 2u);
  EXPECT_EQ(s[0].failures, 1u);
  EXPECT_DOUBLE_EQ(s[0].lambda_hat.mean, 2.0);
  EXPECT_DOUBLE_EQ(s[0].se.mean, 0.2);
}
