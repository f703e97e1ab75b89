#include "stancu/experiments.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "stancu/errors.hpp"

namespace stancu {
namespace {

RunConfig small_config() {
  RunConfig c;
  c.grid_m = 32;
  c.mc_samples = 4;
  c.seed = 7;
  c.threads = 1;
  return c;
}

const ConvergenceRecord& find(const std::vector<ConvergenceRecord>& records, const std::string& experiment,
                              const std::string& function, int n) {
  for (const auto& r : records) {
    if (r.experiment == experiment && r.function == function && r.n == n) {
      return r;
    }
  }
  throw std::runtime_error("record not found: " + experiment + "/" + function + "/" + std::to_string(n));
}

TEST(RunConfig, Validation) {
  RunConfig c = small_config();
  c.n_list = {};
  EXPECT_THROW(c.validate(true), ConfigError);
  c.n_list = {8, 8};
  EXPECT_THROW(c.validate(true), ConfigError);
  c.n_list = {16, 8};
  EXPECT_THROW(c.validate(true), ConfigError);
  c.n_list = {0, 8};
  EXPECT_THROW(c.validate(true), ConfigError);
  c.n_list = {8, 16};
  c.grid_m = 15;
  EXPECT_THROW(c.validate(true), ConfigError);
  c.grid_m = 16;
  c.mc_samples = 1;
  EXPECT_THROW(c.validate(true), ConfigError);
  EXPECT_NO_THROW(c.validate(false));
  c.epsilon = -1.0;
  EXPECT_THROW(c.validate(false), ConfigError);
}

TEST(RunTheorem1, EmptyNListIsAConfigError) {
  RunConfig c = small_config();
  c.n_list = {};
  EXPECT_THROW((void)run_theorem1(c), ConfigError);
}

TEST(RunTheorem1, RejectsUnsupportedDerivativeAndUnknownFunction) {
  RunConfig c = small_config();
  c.which = Derivative::dx2;
  EXPECT_THROW((void)run_theorem1(c), ConfigError);
  c.which = Derivative::dx1;
  c.functions = {"poly", "nope"};
  EXPECT_THROW((void)run_theorem1(c), ConfigError);
}

TEST(RunTheorem1, PolyDx1Decreases) {
  RunConfig c = small_config();
  c.functions = {"poly"};
  c.which = Derivative::dx1;
  c.n_list = {8, 64};
  const auto records = run_theorem1(c);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_LT(*records[1].error_mean, *records[0].error_mean);
  for (const auto& r : records) {
    EXPECT_GT(*r.error_mean, 0.0);
    EXPECT_GE(*r.error_stderr, 0.0);
    EXPECT_EQ(r.mc_samples, 4);
    EXPECT_EQ(r.grid_m, 32);
    EXPECT_EQ(r.wall_ms, 0);
  }
}

TEST(RunTheorem1, OscProducesPositiveRecords) {
  RunConfig c = small_config();
  c.which = Derivative::dx1dx2;
  const auto records = run_theorem1(c);
  ASSERT_EQ(records.size(), 4u);
  for (const auto& r : records) {
    EXPECT_EQ(r.function, "osc");
    EXPECT_GT(*r.error_mean, 0.0);
    EXPECT_TRUE(r.in_hypothesis);
  }
}

TEST(RunTheorem1, SameOutputForAnyThreadCount) {
  RunConfig c = small_config();
  c.functions = {"osc", "ridge"};
  c.mc_samples = 6;
  std::ostringstream serial;
  write_records(run_theorem1(c), OutputFormat::csv, serial);
  c.threads = 4;
  std::ostringstream parallel;
  write_records(run_theorem1(c), OutputFormat::csv, parallel);
  EXPECT_EQ(serial.str(), parallel.str());
}

TEST(RunLemma, RidgeEqle1StreamAndPolyPin) {
  RunConfig c = small_config();
  c.functions = {"ridge", "poly"};
  c.n_list = {16, 64};
  c.grid_m = 128;
  const auto records = run_lemma(c);
  EXPECT_EQ(records.size(), 2u * 2u * 3u);
  const auto& pin = find(records, "lemma-eqle2", "poly", 64);
  EXPECT_NEAR(*pin.error_mean, 2.0308380126953125, 1e-12);
  EXPECT_EQ(*pin.error_stderr, 0.0);
  EXPECT_EQ(pin.mc_samples, 0);
  EXPECT_GT(*find(records, "lemma-eqle1", "ridge", 16).error_mean,
            *find(records, "lemma-eqle1", "ridge", 64).error_mean);
}

TEST(RunLemma, Eqle3VariantsAreDistinctStreams) {
  RunConfig c = small_config();
  c.functions = {"trig"};
  c.n_list = {16};
  const auto verbatim = run_lemma(c);
  c.eqle3_variant = Eqle3Variant::corrected;
  const auto corrected = run_lemma(c);
  const auto& a = find(verbatim, "lemma-eqle3-verbatim", "trig", 16);
  const auto& b = find(corrected, "lemma-eqle3-corrected", "trig", 16);
  EXPECT_NE(*a.error_mean, *b.error_mean);
  EXPECT_THROW((void)find(verbatim, "lemma-eqle3-corrected", "trig", 16), std::runtime_error);
}

TEST(RunLemma, EpsilonAddsMollifierStream) {
  RunConfig c = small_config();
  c.functions = {"osc"};
  c.n_list = {8};
  c.grid_m = 16;
  EXPECT_EQ(run_lemma(c).size(), 3u);
  c.epsilon = 0.05;
  const auto records = run_lemma(c);
  ASSERT_EQ(records.size(), 4u);
  const auto& m = find(records, "mollifier-l1", "osc", 0);
  EXPECT_GT(*m.error_mean, 0.0);
  EXPECT_LT(*m.error_mean, 0.05);
}

TEST(RunMixedSymmetry, OrdersAgreeAndKinkIsFlagged) {
  RunConfig c = small_config();
  c.functions = {"osc", "kink"};
  c.n_list = {48};
  const auto records = run_mixed_symmetry(c);
  ASSERT_EQ(records.size(), 6u);
  EXPECT_LT(*find(records, "mixed-symmetry-gap", "osc", 48).error_mean, 1e-10);
  EXPECT_TRUE(find(records, "mixed-symmetry-d1d2", "osc", 48).in_hypothesis);
  EXPECT_FALSE(find(records, "mixed-symmetry-d1d2", "kink", 48).in_hypothesis);
  EXPECT_NEAR(*find(records, "mixed-symmetry-d1d2", "osc", 48).error_mean,
              *find(records, "mixed-symmetry-d2d1", "osc", 48).error_mean, 1e-10);
}

TEST(RunLorentz, ProbeErrors) {
  RunConfig c = small_config();
  c.n_list = {200};
  const auto records = run_lorentz(c);
  ASSERT_EQ(records.size(), lorentz_functions().size() * lorentz_probes().size());
  for (double x : lorentz_probes()) {
    char label[32];
    std::snprintf(label, sizeof label, "@%g", x);
    EXPECT_LT(*find(records, "lorentz", std::string("identity") + label, 200).error_mean, 0.01);
    EXPECT_LT(*find(records, "lorentz", std::string("constant") + label, 200).error_mean, 1e-12);
  }
  EXPECT_LT(*find(records, "lorentz", "step@0.25", 200).error_mean, 0.05);
  c.functions = {"poly"};
  EXPECT_THROW((void)run_lorentz(c), ConfigError);
}

TEST(RunBetaCheck, Sweeps) {
  const auto tiny = run_beta_check(1);
  EXPECT_EQ(tiny.exhaustive_cases, 1);
  EXPECT_EQ(tiny.sampled_cases, 0);
  EXPECT_EQ(tiny.max_deviation(), 0.0);
  EXPECT_LT(run_beta_check(8).max_deviation(), 1e-12);
  const auto big = run_beta_check(1024);
  EXPECT_EQ(big.sampled_cases, 1000);
  EXPECT_LT(big.exhaustive_max_deviation, 1e-12);
  EXPECT_LT(big.sampled_max_deviation, 1e-10);
  EXPECT_EQ(beta_records(big, 7).size(), 2u);
  EXPECT_THROW((void)run_beta_check(0), ConfigError);
}

TEST(Output, CsvHeaderAndRow) {
  std::ostringstream out;
  write_csv_header(out);
  ConvergenceRecord r;
  r.experiment = "theorem1";
  r.function = "osc";
  r.n = 12;
  r.which = Derivative::dx1dx2;
  r.error_mean = 0.1;
  r.error_stderr = 0.0;
  r.grid_m = 128;
  r.mc_samples = 32;
  r.seed = 7;
  write_records({r}, OutputFormat::csv, out);
  EXPECT_EQ(out.str(),
            "experiment,function,n,which,error_mean,error_stderr,grid_m,mc_samples,seed,wall_ms\n"
            "theorem1,osc,12,dx1dx2,0.10000000000000001,0,128,32,7,0\n");
}

TEST(Output, FailedCellLeavesErrorFieldsEmpty) {
  ConvergenceRecord r;
  r.experiment = "lemma-eqle1";
  r.function = "poly";
  r.n = 4;
  r.which = Derivative::dx1;
  r.failure = "boom";
  EXPECT_TRUE(r.failed());
  std::ostringstream csv;
  write_records({r}, OutputFormat::csv, csv);
  EXPECT_EQ(csv.str(), "lemma-eqle1,poly,4,dx1,,,0,0,0,0\n");
  std::ostringstream json;
  write_records({r}, OutputFormat::json, json);
  EXPECT_NE(json.str().find("\"error_mean\":null"), std::string::npos) << json.str();
}

TEST(Output, JsonMirrorsFields) {
  ConvergenceRecord r;
  r.experiment = "theorem1";
  r.function = "kink";
  r.n = 3;
  r.which = Derivative::dx1;
  r.error_mean = 0.25;
  r.error_stderr = 0.5;
  r.in_hypothesis = false;
  std::ostringstream json;
  write_records({r}, OutputFormat::json, json);
  EXPECT_EQ(json.str(),
            "{\"experiment\":\"theorem1\",\"function\":\"kink\",\"n\":3,\"which\":\"dx1\",\"error_mean\":0.25,"
            "\"error_stderr\":0.5,\"grid_m\":0,\"mc_samples\":0,\"seed\":0,\"wall_ms\":0,\"in_hypothesis\":false}\n");
}

TEST(Output, SortedByExperimentFunctionN) {
  auto make = [](std::string experiment, std::string function, int n) {
    ConvergenceRecord r;
    r.experiment = std::move(experiment);
    r.function = std::move(function);
    r.n = n;
    return r;
  };
  std::vector<ConvergenceRecord> records{make("b", "x", 2), make("a", "y", 9), make("a", "x", 20), make("a", "x", 3)};
  sort_records(records);
  EXPECT_EQ(records[0].n, 3);
  EXPECT_EQ(records[1].n, 20);
  EXPECT_EQ(records[2].function, "y");
  EXPECT_EQ(records[3].experiment, "b");
}

TEST(Output, SeventeenSignificantDigits) {
  EXPECT_EQ(format_real(0.1), "0.10000000000000001");
  EXPECT_EQ(format_real(1.0), "1");
  EXPECT_EQ(std::stod(format_real(M_PI)), M_PI);
}

}  // namespace
}  // namespace stancu
