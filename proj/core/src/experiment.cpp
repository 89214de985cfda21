#include "fmpart/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "fmpart/fm_classic.hpp"
#include "fmpart/fm_pairwise.hpp"

namespace fmpart {

std::optional<double> gain_mu(std::size_t fm_cut, std::size_t variant_cut) {
  if (fm_cut == 0) return std::nullopt;
  return (static_cast<double>(fm_cut) - static_cast<double>(variant_cut)) / static_cast<double>(fm_cut) * 100.0;
}

std::string format_gain_mu(double value) {
  // Nudge by a relative epsilon so exact two-decimal values survive the
  // binary round trip (e.g. 0.29 * 100).
  const double scaled = value * 100.0;
  const double nudged = scaled + std::copysign(std::abs(scaled) * 1e-12, scaled);
  const double truncated = std::trunc(nudged) / 100.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", truncated == 0.0 ? 0.0 : truncated);
  return buf;
}

namespace {

RunResult run_one(const ExperimentInput& in, Algorithm algo, std::uint64_t seed, const FmConfig& base) {
  FmConfig cfg = base;
  cfg.seed = seed;
  RunResult r = algo == Algorithm::Fm ? fm_run(in.graph, cfg) : variant_run(in.graph, cfg);
  r.label = in.label;
  return r;
}

}  // namespace

std::vector<RunResult> run_experiment(std::span<const ExperimentInput> inputs, const ExperimentOptions& opts) {
  struct Task {
    std::size_t input;
    Algorithm algo;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    for (Algorithm a : opts.algorithms) {
      for (std::uint64_t s : opts.seeds) tasks.push_back({i, a, s});
    }
  }

  std::vector<RunResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
      results[t] = run_one(inputs[tasks[t].input], tasks[t].algo, tasks[t].seed, opts.config);
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(opts.jobs, 1, std::max<std::size_t>(tasks.size(), 1));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  return results;
}

std::vector<SummaryRow> summarize(std::span<const RunResult> runs) {
  std::vector<SummaryRow> rows;
  for (const RunResult& r : runs) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const SummaryRow& s) { return s.label == r.label; });
    if (it == rows.end()) {
      rows.push_back(SummaryRow{r.label, std::nullopt, std::nullopt, std::nullopt});
      it = rows.end() - 1;
    }
    auto& slot = r.algorithm == Algorithm::Fm ? it->fm_best : it->variant_best;
    slot = slot ? std::min(*slot, r.optimal_cut) : r.optimal_cut;
  }
  for (SummaryRow& s : rows) {
    if (s.fm_best && s.variant_best) s.gain_mu = gain_mu(*s.fm_best, *s.variant_best);
  }
  return rows;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_runs_csv(std::ostream& out, std::span<const RunResult> runs, bool include_timing) {
  out << "file,algorithm,seed,initial_cut,optimal_cut,passes,elapsed_ms\n";
  char ms[32];
  for (const RunResult& r : runs) {
    std::snprintf(ms, sizeof ms, "%.3f", include_timing ? r.elapsed_ms : 0.0);
    out << csv_field(r.label) << ',' << to_string(r.algorithm) << ',' << r.seed << ',' << r.initial_cut << ','
        << r.optimal_cut << ',' << r.passes << ',' << ms << '\n';
  }
}

void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows,
                       std::span<const std::uint64_t> seeds) {
  out << "# best optimal_cut over " << seeds.size() << " seeds:";
  for (std::size_t i = 0; i < seeds.size(); ++i) out << (i ? "," : " ") << seeds[i];
  out << '\n';
  out << "file,fm_best,variant_best,gain_mu\n";
  for (const SummaryRow& s : rows) {
    out << csv_field(s.label) << ',';
    if (s.fm_best) out << *s.fm_best;
    out << ',';
    if (s.variant_best) out << *s.variant_best;
    out << ',';
    if (s.gain_mu) out << format_gain_mu(*s.gain_mu);
    else if (s.fm_best && s.variant_best) out << "undefined";
    out << '\n';
  }
}

VerifyRow verify_instance(const ExperimentInput& input, const ExperimentOptions& opts) {
  if (opts.seeds.empty()) throw std::invalid_argument("verify needs at least one seed");
  const auto exact = oracle::exact_min_cut_balanced(input.graph, oracle::Balance::OffByOne);
  VerifyRow row;
  row.label = input.label;
  row.oracle_cut = exact.optimum_cut;

  ExperimentOptions both = opts;
  both.algorithms = {Algorithm::Fm, Algorithm::Variant};
  const auto runs = run_experiment(std::span(&input, 1), both);
  const auto summary = summarize(runs);
  row.fm_cut = summary.front().fm_best.value();
  row.variant_cut = summary.front().variant_best.value();
  return row;
}

}  // namespace fmpart
