#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    const char* cli = std::getenv("YS_CLI_PATH");
    const char* fixtures = std::getenv("YS_FIXTURE_DIR");
    ASSERT_NE(cli, nullptr) << "YS_CLI_PATH is not set";
    ASSERT_NE(fixtures, nullptr) << "YS_FIXTURE_DIR is not set";
    cli_ = cli;
    fixtures_ = fixtures;
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("ys_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override {
    if (!dir_.empty()) fs::remove_all(dir_);
  }

  RunResult run(const std::string& args) const {
    const fs::path out = dir_ / "stdout.txt";
    const fs::path err = dir_ / "stderr.txt";
    const std::string command = "env -u YS_SEED '" + cli_.string() + "' " + args + " >'" +
                                out.string() + "' 2>'" + err.string() + "'";
    const int status = std::system(command.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
  }

  std::string fixture(const std::string& name) const { return "'" + (fixtures_ / name).string() + "'"; }
  std::string tmp(const std::string& name) const { return "'" + (dir_ / name).string() + "'"; }

  fs::path cli_;
  fs::path fixtures_;
  fs::path dir_;
};

}  // namespace

TEST_F(Cli, FitReportsJson) {
  const auto r = run("fit " + fixture("counts_small.txt"));
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"lambda_hat", "std_err", "iterations", "status", "trace", "convergence",
                          "loglik_trace", "information", "warnings"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["status"], "converged");
  EXPECT_GT(j["lambda_hat"].get<double>(), 0.0);
  EXPECT_EQ(j["trace"].size(), j["iterations"].get<std::size_t>() + 1);
}

TEST_F(Cli, FitAllOnesIsDiverging) {
  const auto r = run("fit " + fixture("counts_all_ones.txt"));
  EXPECT_EQ(r.code, 2);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "diverging");
  EXPECT_TRUE(j["std_err"].is_null());
}

TEST_F(Cli, FitMaxIterExitCode) {
  const auto r = run("fit --max-iter 1 --tol 1e-15 " + fixture("counts_small.txt"));
  EXPECT_EQ(r.code, 3);
}

TEST_F(Cli, BadInputNamesTheLine) {
  const auto r = run("fit " + fixture("counts_bad_line3.txt"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
  EXPECT_EQ(run("fit " + tmp("missing.txt")).code, 1);
}

TEST_F(Cli, DiagnoseAddsCurves) {
  const auto r = run("diagnose --grid-points 11 " + fixture("counts_small.txt"));
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.contains("convexity"));
  EXPECT_EQ(j["loglik_curve"].size(), 11u);
}

TEST_F(Cli, GibbsReproducible) {
  const std::string args = "gibbs --n-samples 600 --burn-in 100 --seed 5 " +
                           fixture("counts_small.txt") + " --chain-out ";
  const auto a = run(args + tmp("a.csv"));
  const auto b = run(args + tmp("b.csv"));
  ASSERT_EQ(a.code, 0) << a.err;
  auto ja = nlohmann::json::parse(a.out);
  auto jb = nlohmann::json::parse(b.out);
  ja.erase("chain_file");
  jb.erase("chain_file");
  EXPECT_EQ(ja, jb);
  EXPECT_EQ(slurp(dir_ / "a.csv"), slurp(dir_ / "b.csv"));
  EXPECT_EQ(slurp(dir_ / "a.csv").rfind("iter,lambda\n", 0), 0u);
  EXPECT_EQ(ja["n_retained"], 500);
}

TEST_F(Cli, SimulateReproducible) {
  ASSERT_EQ(run("simulate --lambda 1.3 --n 300 --seed 9 --out " + tmp("a.txt")).code, 0);
  ASSERT_EQ(run("simulate --lambda 1.3 --n 300 --seed 9 --out " + tmp("b.txt")).code, 0);
  ASSERT_EQ(run("simulate --lambda 1.3 --n 300 --seed 10 --out " + tmp("c.txt")).code, 0);
  const std::string a = slurp(dir_ / "a.txt");
  EXPECT_EQ(a, slurp(dir_ / "b.txt"));
  EXPECT_NE(a, slurp(dir_ / "c.txt"));
  EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 300);
  // The simulated file fits cleanly.
  EXPECT_EQ(run("fit " + tmp("a.txt")).code, 0);
}

TEST_F(Cli, SimulateUrnNeedsLambdaAboveOne) {
  const auto r = run("simulate --generator urn --lambda 0.8 --n 100 --out " + tmp("u.txt"));
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run("simulate --generator urn --lambda 1.5 --n 100 --out " + tmp("u.txt")).code, 0);
}

TEST_F(Cli, TextStripsByDefault) {
  const auto r = run("text " + fixture("gutenberg_sample.txt") + " --out " + tmp("c.txt") +
                     " --tsv " + tmp("v.tsv"));
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n_tokens"], 29);
  EXPECT_EQ(slurp(dir_ / "v.tsv").rfind("the\t7\n", 0), 0u);
  const auto raw = run("text --no-strip " + fixture("gutenberg_sample.txt") + " --out " + tmp("d.txt"));
  ASSERT_EQ(raw.code, 0) << raw.err;
  EXPECT_GT(nlohmann::json::parse(raw.out)["n_tokens"].get<int>(), 29);
}

TEST_F(Cli, ExperimentRuns) {
  const auto r = run("experiment --lambda 1.2 --n 100 --reps 4 --seed 3 --gibbs-samples 300 "
                     "--gibbs-burn-in 50 --estimators em,gibbs --csv " + tmp("reps.csv"));
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["spec"]["estimators"].size(), 2u);
  EXPECT_EQ(j["summary"].size(), 2u);
  const std::string csv = slurp(dir_ / "reps.csv");
  EXPECT_EQ(csv.rfind("rep,estimator,lambda_hat,se,iters,status\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 9);
}

TEST_F(Cli, UnknownSubcommandFails) {
  EXPECT_NE(run("frobnicate").code, 0);
  EXPECT_NE(run("").code, 0);
}
