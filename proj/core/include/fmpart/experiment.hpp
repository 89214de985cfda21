#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fmpart/oracle.hpp"
#include "fmpart/pass.hpp"

namespace fmpart {

/// (fm_cut - variant_cut) / fm_cut * 100; nullopt when fm_cut is 0.
std::optional<double> gain_mu(std::size_t fm_cut, std::size_t variant_cut);

/// Two-decimal rendering, truncated toward zero.
std::string format_gain_mu(double value);

struct ExperimentInput {
  std::string label;
  Hypergraph graph;
};

struct ExperimentOptions {
  std::vector<Algorithm> algorithms{Algorithm::Fm, Algorithm::Variant};
  std::vector<std::uint64_t> seeds;
  FmConfig config;
  unsigned jobs = 1;
};

/// One RunResult per (input, algorithm, seed), in that nesting order no
/// matter how many jobs run concurrently.
std::vector<RunResult> run_experiment(std::span<const ExperimentInput> inputs, const ExperimentOptions& opts);

struct SummaryRow {
  std::string label;
  std::optional<std::size_t> fm_best;
  std::optional<std::size_t> variant_best;
  std::optional<double> gain_mu;
};

/// Best (minimum) optimal cut per file and algorithm across seeds, in
/// first-appearance order of the file labels.
std::vector<SummaryRow> summarize(std::span<const RunResult> runs);

/// `file,algorithm,seed,initial_cut,optimal_cut,passes,elapsed_ms`. With
/// include_timing false the elapsed column is written as 0 so the output is
/// byte-deterministic.
void write_runs_csv(std::ostream& out, std::span<const RunResult> runs, bool include_timing = true);

/// `# ...` provenance line naming the seed list, then
/// `file,fm_best,variant_best,gain_mu`. Missing values are empty; an
/// undefined gain is written as `undefined`.
void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows,
                       std::span<const std::uint64_t> seeds);

struct VerifyRow {
  std::string label;
  std::size_t fm_cut = 0;
  std::size_t variant_cut = 0;
  std::size_t oracle_cut = 0;

  bool fm_match() const noexcept { return fm_cut == oracle_cut; }
  bool variant_match() const noexcept { return variant_cut == oracle_cut; }
  bool bound_holds() const noexcept { return fm_cut >= oracle_cut && variant_cut >= oracle_cut; }
};

/// Best-of-seeds cuts of both algorithms against the exact balanced optimum.
/// Throws std::invalid_argument for instances over oracle::kMaxCells cells.
VerifyRow verify_instance(const ExperimentInput& input, const ExperimentOptions& opts);

/// Quote a CSV field when it holds a comma, quote or newline.
std::string csv_field(std::string_view s);

}  // namespace fmpart
