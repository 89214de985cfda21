#include "fmpart/experiment.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "support/fixtures.hpp"

namespace fmpart {
namespace {

TEST(GainMu, PublishedRows) {
  EXPECT_EQ(format_gain_mu(*gain_mu(1534, 858)), "44.06");
  EXPECT_EQ(format_gain_mu(*gain_mu(9242, 3321)), "64.06");
  EXPECT_EQ(format_gain_mu(*gain_mu(14508, 4312)), "70.27");
  EXPECT_EQ(format_gain_mu(*gain_mu(7, 7)), "0.00");
  EXPECT_FALSE(gain_mu(0, 3));
  EXPECT_EQ(format_gain_mu(*gain_mu(100, 71)), "29.00");
  EXPECT_EQ(format_gain_mu(*gain_mu(4, 5)), "-25.00");
}

TEST(GainMu, SignMatchesDirection) {
  EXPECT_GT(*gain_mu(10, 9), 0.0);
  EXPECT_LT(*gain_mu(10, 11), 0.0);
}

std::vector<ExperimentInput> fixtures() {
  return {{"fig1.hgr", testing::fig1()}, {"h4.hgr", testing::h4()}};
}

TEST(RunExperiment, RowsAndSummary) {
  const auto inputs = fixtures();
  ExperimentOptions opts;
  opts.seeds = {1, 2, 3};
  const auto runs = run_experiment(std::span(inputs.data(), 1), opts);
  ASSERT_EQ(runs.size(), 6u);
  for (const auto& r : runs) {
    EXPECT_EQ(r.optimal_cut, 1u);
    EXPECT_LE(r.optimal_cut, r.initial_cut);
    EXPECT_GE(r.passes, 1u);
  }
  const auto summary = summarize(runs);
  ASSERT_EQ(summary.size(), 1u);
  EXPECT_EQ(summary[0].fm_best, 1u);
  EXPECT_EQ(summary[0].variant_best, 1u);
  EXPECT_EQ(format_gain_mu(*summary[0].gain_mu), "0.00");

  ExperimentOptions one;
  one.seeds = {1};
  const auto h4_runs = run_experiment(std::span(inputs.data() + 1, 1), one);
  const auto h4_summary = summarize(h4_runs);
  EXPECT_EQ(h4_summary[0].fm_best, 0u);
  EXPECT_FALSE(h4_summary[0].gain_mu);
  std::ostringstream out;
  write_summary_csv(out, h4_summary, one.seeds);
  EXPECT_NE(out.str().find("h4.hgr,0,0,undefined"), std::string::npos);
}

TEST(RunExperiment, EmptyInputs) {
  ExperimentOptions opts;
  opts.seeds = {1};
  const auto runs = run_experiment({}, opts);
  EXPECT_TRUE(runs.empty());
  std::ostringstream out;
  write_runs_csv(out, runs);
  EXPECT_EQ(out.str(), "file,algorithm,seed,initial_cut,optimal_cut,passes,elapsed_ms\n");
}

TEST(RunExperiment, ByteDeterministicAcrossJobCounts) {
  std::mt19937_64 gen(8);
  std::vector<ExperimentInput> inputs;
  for (int i = 0; i < 4; ++i) {
    inputs.push_back({"r" + std::to_string(i), testing::random_hypergraph(gen, {30, 50, 60, 2, 5})});
  }
  ExperimentOptions opts;
  opts.seeds = {1, 2, 3, 4};
  std::ostringstream a, b;
  opts.jobs = 1;
  write_runs_csv(a, run_experiment(inputs, opts), false);
  opts.jobs = 4;
  write_runs_csv(b, run_experiment(inputs, opts), false);
  EXPECT_EQ(a.str(), b.str());
}

TEST(Summary, GainRecomputedFromRowsMatches) {
  std::mt19937_64 gen(21);
  std::vector<ExperimentInput> inputs;
  for (int i = 0; i < 3; ++i) {
    inputs.push_back({"g" + std::to_string(i), testing::random_hypergraph(gen, {40, 60, 80, 2, 5})});
  }
  ExperimentOptions opts;
  opts.seeds = {1, 2, 3};
  const auto runs = run_experiment(inputs, opts);
  const auto summary = summarize(runs);
  for (const auto& s : summary) {
    std::size_t fm = SIZE_MAX, var = SIZE_MAX;
    for (const auto& r : runs) {
      if (r.label != s.label) continue;
      (r.algorithm == Algorithm::Fm ? fm : var) = std::min(r.algorithm == Algorithm::Fm ? fm : var, r.optimal_cut);
    }
    EXPECT_EQ(*s.fm_best, fm);
    EXPECT_EQ(*s.variant_best, var);
    if (fm > 0) EXPECT_EQ(format_gain_mu(*s.gain_mu), format_gain_mu(*gain_mu(fm, var)));
  }
}

TEST(Csv, QuotesFields) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("q\"x"), "\"q\"\"x\"");
}

TEST(Verify, FixturesMatchOracle) {
  ExperimentOptions opts;
  opts.seeds = {1, 2, 3};
  for (const auto& in : fixtures()) {
    const VerifyRow row = verify_instance(in, opts);
    EXPECT_TRUE(row.fm_match()) << in.label;
    EXPECT_TRUE(row.variant_match()) << in.label;
  }
  const Hypergraph big = Hypergraph::build(std::vector<std::vector<CellId>>{}, 30);
  EXPECT_THROW(verify_instance({"big", big}, opts), std::invalid_argument);
}

TEST(Verify, RandomTwentyFourCellBound) {
  std::mt19937_64 gen(24);
  ExperimentOptions opts;
  opts.seeds = {1, 2};
  for (int i = 0; i < 3; ++i) {
    const VerifyRow row = verify_instance({"r", testing::random_hypergraph(gen, {24, 24, 36, 2, 5})}, opts);
    EXPECT_TRUE(row.bound_holds());
  }
}

}  // namespace
}  // namespace fmpart
