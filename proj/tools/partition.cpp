// partition: FM / pairwise-swap bipartitioning harness.
//
//   partition run    --input <path>... [--algo both] [--seeds 10] [--csv runs.csv] [--summary summary.csv]
//   partition verify --input <path>...
//   partition stats  --input <path>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fmpart/experiment.hpp"
#include "fmpart/netlist_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFileFailed = 1;
constexpr int kExitBadArgs = 2;

struct Common {
  std::vector<std::string> inputs;
  std::string format = "auto";
  std::string seeds = "10";
  std::string tie = "random";
  unsigned max_passes = 100;
  unsigned jobs = 1;
};

// "N" -> 1..N, "a..b" -> a..b, "a,b,c" -> list.
std::vector<std::uint64_t> parse_seeds(const std::string& spec) {
  std::vector<std::uint64_t> out;
  if (auto dots = spec.find(".."); dots != std::string::npos) {
    const auto lo = std::stoull(spec.substr(0, dots));
    const auto hi = std::stoull(spec.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty seed range");
    for (auto s = lo; s <= hi; ++s) out.push_back(s);
  } else if (spec.find(',') != std::string::npos) {
    std::size_t pos = 0;
    while (pos <= spec.size()) {
      const auto comma = std::min(spec.find(',', pos), spec.size());
      if (comma > pos) out.push_back(std::stoull(spec.substr(pos, comma - pos)));
      pos = comma + 1;
    }
  } else {
    const auto n = std::stoull(spec);
    for (std::uint64_t s = 1; s <= n; ++s) out.push_back(s);
  }
  if (out.empty()) throw std::invalid_argument("no seeds given");
  return out;
}

fmpart::NetlistFormat to_format(const std::string& f) {
  if (f == "net") return fmpart::NetlistFormat::Net;
  if (f == "netd") return fmpart::NetlistFormat::NetD;
  if (f == "hgr") return fmpart::NetlistFormat::Hgr;
  return fmpart::NetlistFormat::Auto;
}

fmpart::TiePolicy to_tie(const std::string& t) {
  if (t == "fifo") return fmpart::TiePolicy::Fifo;
  if (t == "lifo") return fmpart::TiePolicy::Lifo;
  return fmpart::TiePolicy::Random;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("FMPART_JOBS")) {
    try {
      const unsigned long v = std::stoul(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid FMPART_JOBS='" << env << "'\n";
  }
  return 1;
}

void add_common(CLI::App* cmd, Common& c, bool run_options) {
  cmd->add_option("-i,--input", c.inputs, "Netlist files (.netD, .net, .hgr)");
  cmd->add_option("--format", c.format, "Input format")
      ->check(CLI::IsMember({"auto", "net", "netd", "hgr"}))
      ->capture_default_str();
  if (!run_options) return;
  cmd->add_option("--seeds", c.seeds, "Seed count N (1..N), range a..b, or list a,b,c")->capture_default_str();
  cmd->add_option("--tie", c.tie, "Tie policy within a gain bucket")
      ->check(CLI::IsMember({"random", "fifo", "lifo"}))
      ->capture_default_str();
  cmd->add_option("--max-passes", c.max_passes, "Pass cap per run (0 = unbounded)")->capture_default_str();
  cmd->add_option("--jobs", c.jobs, "Concurrent runs (default from FMPART_JOBS)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

fmpart::ExperimentOptions make_options(const Common& c) {
  fmpart::ExperimentOptions opts;
  opts.seeds = parse_seeds(c.seeds);
  opts.config.tie_policy = to_tie(c.tie);
  if (c.max_passes == 0) opts.config.max_passes.reset();
  else opts.config.max_passes = c.max_passes;
  opts.jobs = c.jobs;
  return opts;
}

// Loads every input, logging failures. Returns false if any failed.
bool load_all(const Common& c, std::vector<fmpart::ExperimentInput>& inputs,
              std::vector<fmpart::NetlistDocument>* docs = nullptr) {
  bool ok = true;
  for (const auto& path : c.inputs) {
    try {
      auto doc = fmpart::load_netlist(path, to_format(c.format));
      if (doc.duplicate_pins > 0) {
        std::cerr << path << ": dropped " << doc.duplicate_pins << " duplicate pins\n";
      }
      inputs.push_back({path, doc.hypergraph()});
      if (docs) docs->push_back(std::move(doc));
    } catch (const std::exception& e) {
      std::cerr << "error: " << path << ": " << e.what() << '\n';
      ok = false;
    }
  }
  return ok;
}

std::ostream* open_or_stdout(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return &std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  return &file;
}

int cmd_run(const Common& c, const std::string& algo, const std::string& csv_path,
            const std::string& summary_path, bool timing, const std::string& partition_dir) {
  const auto opts_base = make_options(c);
  std::vector<fmpart::ExperimentInput> inputs;
  std::vector<fmpart::NetlistDocument> docs;
  const bool loaded = load_all(c, inputs, &docs);

  auto opts = opts_base;
  if (algo == "fm") opts.algorithms = {fmpart::Algorithm::Fm};
  else if (algo == "variant") opts.algorithms = {fmpart::Algorithm::Variant};

  const auto runs = fmpart::run_experiment(inputs, opts);
  const auto summary = fmpart::summarize(runs);

  std::ofstream csv_file, summary_file;
  fmpart::write_runs_csv(*open_or_stdout(csv_path, csv_file), runs, timing);
  fmpart::write_summary_csv(*open_or_stdout(summary_path, summary_file), summary, opts.seeds);

  if (!partition_dir.empty()) {
    std::filesystem::create_directories(partition_dir);
    // Best seed per (file, algorithm); earliest seed wins ties.
    std::map<std::pair<std::size_t, fmpart::Algorithm>, const fmpart::RunResult*> best;
    for (const auto& r : runs) {
      const std::size_t file = static_cast<std::size_t>(
          std::find_if(inputs.begin(), inputs.end(), [&](const auto& in) { return in.label == r.label; }) -
          inputs.begin());
      auto& slot = best[{file, r.algorithm}];
      if (!slot || r.optimal_cut < slot->optimal_cut) slot = &r;
    }
    for (const auto& [key, r] : best) {
      const auto stem = std::filesystem::path(inputs[key.first].label).filename().string();
      std::ofstream out(std::filesystem::path(partition_dir) /
                        (stem + "." + std::string(fmpart::to_string(key.second)) + ".part"));
      fmpart::write_partition(docs[key.first], r->sides, out);
    }
  }

  if (c.inputs.empty()) {
    std::cerr << "nothing to do: no --input given\n";
    return kExitBadArgs;
  }
  return loaded ? kExitOk : kExitFileFailed;
}

int cmd_verify(const Common& c) {
  const auto opts = make_options(c);
  std::vector<fmpart::ExperimentInput> inputs;
  bool ok = load_all(c, inputs);
  std::cout << "file,fm_cut,variant_cut,oracle_cut,fm_match,variant_match\n";
  for (const auto& in : inputs) {
    try {
      const auto row = fmpart::verify_instance(in, opts);
      std::cout << fmpart::csv_field(row.label) << ',' << row.fm_cut << ',' << row.variant_cut << ','
                << row.oracle_cut << ',' << (row.fm_match() ? "match" : "miss") << ','
                << (row.variant_match() ? "match" : "miss") << '\n';
      if (!row.bound_holds()) {
        std::cerr << "error: " << in.label << ": heuristic cut below the exact optimum\n";
        ok = false;
      }
    } catch (const std::exception& e) {
      std::cerr << "error: " << in.label << ": " << e.what() << '\n';
      ok = false;
    }
  }
  if (c.inputs.empty()) return kExitBadArgs;
  return ok ? kExitOk : kExitFileFailed;
}

int cmd_stats(const Common& c) {
  std::vector<fmpart::ExperimentInput> inputs;
  const bool ok = load_all(c, inputs);
  std::cout << "file,cells,nets,pins,max_degree\n";
  for (const auto& in : inputs) {
    std::cout << fmpart::csv_field(in.label) << ',' << in.graph.cell_count() << ',' << in.graph.net_count() << ','
              << in.graph.pin_count() << ',' << in.graph.max_cell_degree() << '\n';
  }
  if (c.inputs.empty()) return kExitBadArgs;
  return ok ? kExitOk : kExitFileFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergraph bipartitioning with FM and its pairwise-swap variant"};
  app.require_subcommand(1);

  Common run_args, verify_args, stats_args;
  run_args.jobs = verify_args.jobs = default_jobs();

  std::string algo = "both", csv_path, summary_path, partition_dir;
  bool no_timing = false;
  auto* run = app.add_subcommand("run", "Run FM and/or the variant over netlists and seeds");
  add_common(run, run_args, true);
  run->add_option("--algo", algo, "Algorithms to run")
      ->check(CLI::IsMember({"fm", "variant", "both"}))
      ->capture_default_str();
  run->add_option("--csv", csv_path, "Per-run CSV (default stdout)");
  run->add_option("--summary", summary_path, "Per-file summary CSV (default stdout)");
  run->add_flag("--no-timing", no_timing, "Write elapsed_ms as 0 for byte-reproducible output");
  run->add_option("--partition-dir", partition_dir, "Write the best partition per file and algorithm here");

  auto* verify = app.add_subcommand("verify", "Cross-check both algorithms against the exact optimum");
  add_common(verify, verify_args, true);

  auto* stats = app.add_subcommand("stats", "Print cells, nets, pins and max cell degree");
  add_common(stats, stats_args, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadArgs;
  }

  try {
    if (*run) return cmd_run(run_args, algo, csv_path, summary_path, !no_timing, partition_dir);
    if (*verify) return cmd_verify(verify_args);
    return cmd_stats(stats_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadArgs;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFileFailed;
  }
}
