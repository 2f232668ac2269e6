#include "brigkit/sweep.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace {

using namespace brigkit;
using namespace brigkit::app;

SequenceParams sp(long a, long b, long p, long q) { return make_params(a, b, p, q); }

SweepConfig small_config() {
  SweepConfig c;
  c.a = {-3, 3};
  c.b = {-3, 3};
  c.p = {-2, 2};
  c.q = {-2, 2};
  c.n_horizon = 60;
  c.oracle_horizon = 300;
  return c;
}

TEST(Oracle, Examples) {
  EXPECT_EQ(brute_force_zero_oracle(sp(3, 6, 5, 6), 100), std::vector<Index>{5});
  EXPECT_EQ(brute_force_zero_oracle(sp(1, -1, 0, 1), 100), std::vector<Index>{0});
  const ZeroPair z = construct_zero_at(Integer(2), Integer(-3), 17);
  EXPECT_EQ(brute_force_zero_oracle(SequenceParams{Integer(2), Integer(-3), z.p, z.q}, 300), std::vector<Index>{17});
}

TEST(Verdict, Codes) {
  EXPECT_EQ(verdict_code(ZeroResult{ZeroAt{5}}), "zero-at:5");
  EXPECT_EQ(verdict_code(ZeroResult{NoZero{29, true, false}}), "none:29:conclusive");
  EXPECT_EQ(verdict_code(ZeroResult{PeriodicZeros{6, {2, 5}}}), "periodic:6:2|5");
}

TEST(Config, ValidationRejectsBadValues) {
  SweepConfig c;
  EXPECT_NO_THROW(validate(c));
  c.a = {3, 2};
  EXPECT_THROW(validate(c), ConfigError);
  c = SweepConfig{};
  c.format = "xml";
  EXPECT_THROW(validate(c), ConfigError);
  c = SweepConfig{};
  c.n_horizon = kIterativeLimit + 1;
  EXPECT_THROW(validate(c), ConfigError);
}

TEST(Config, JsonRoundTrip) {
  SweepConfig c = small_config();
  c.c5 = Rational(7, 2);
  c.c4 = 1234;
  const SweepConfig back = config_from_json(config_to_json(c));
  EXPECT_EQ(config_to_json(back), config_to_json(c));
  EXPECT_THROW(config_from_json(json{{"a", "oops"}}), ConfigError);
}

TEST(Config, EnvironmentOverridesThreads) {
  SweepConfig c;
  ::setenv("BRIGKIT_THREADS", "3", 1);
  apply_environment(c);
  EXPECT_EQ(c.parallelism, 3);
  ::setenv("BRIGKIT_THREADS", "zero", 1);
  EXPECT_THROW(apply_environment(c), ConfigError);
  ::unsetenv("BRIGKIT_THREADS");
}

TEST(Sweep, SmallGridHasNoViolations) {
  const Report rep = run_sweep(small_config());
  EXPECT_EQ(rep.records.size(), 7u * 7u * 5u * 5u);
  EXPECT_EQ(rep.summary.violations, 0u);
  for (const auto& r : rep.records) {
    EXPECT_TRUE(r.oracle_agrees) << params_key(r);
    EXPECT_TRUE(r.fast_agrees) << params_key(r);
  }
}

TEST(Sweep, DeterministicAcrossParallelism) {
  SweepConfig c = small_config();
  c.parallelism = 1;
  const std::string one = render_report(run_sweep(c));
  c.parallelism = 4;
  const std::string four = render_report(run_sweep(c));
  EXPECT_EQ(one, four);
  c.format = "csv";
  c.parallelism = 1;
  const std::string csv1 = render_report(run_sweep(c));
  c.parallelism = 3;
  EXPECT_EQ(csv1, render_report(run_sweep(c)));
}

TEST(Sweep, JsonRoundTripIsIdentity) {
  const Report rep = run_sweep(small_config());
  const json j = to_json(rep);
  const Report back = report_from_json(j);
  EXPECT_EQ(to_json(back).dump(), j.dump());
  EXPECT_EQ(back.records, rep.records);
  // Integers are decimal strings.
  EXPECT_TRUE(j.at("records").at(0).at("params").at("a").is_string());
  EXPECT_TRUE(j.at("meta").contains("version"));
}

TEST(Sweep, CsvRoundTripIsIdentity) {
  const Report rep = run_sweep(small_config());
  const std::string csv = to_csv(rep);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kCsvHeader);
  const std::vector<Record> back = records_from_csv(csv);
  EXPECT_EQ(back, rep.records);
  Report again = rep;
  again.records = back;
  EXPECT_EQ(to_csv(again), csv);
}

TEST(Sweep, WriteReportCreatesFile) {
  const auto path = std::filesystem::temp_directory_path() / "brigkit_sweep_test.json";
  const Report rep = run_sweep(small_config());
  write_report(rep, path.string());
  std::ifstream in(path);
  json j;
  in >> j;
  EXPECT_EQ(j.at("summary").at("records").get<Index>(), rep.summary.records);
  std::filesystem::remove(path);
}

TEST(Sweep, UnwritablePathLeavesNoFile) {
  const Report rep = run_sweep(small_config());
  EXPECT_ANY_THROW(write_report(rep, "/nonexistent-dir/x/report.json"));
  EXPECT_FALSE(std::filesystem::exists("/nonexistent-dir/x/report.json"));
}

}  // namespace
