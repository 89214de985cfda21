#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fmpart/gain_state.hpp"
#include "fmpart/hypergraph.hpp"

namespace fmpart {

/// One move (FM) or one swap (pairwise variant) of a pass.
struct PassStep {
  CellId first = 0;
  std::optional<CellId> second;
  int gain = 0;
  std::int64_t cumulative_gain = 0;
  std::size_t cut_after = 0;
  bool balanced = true;
};

/// Ordered log of a pass. Prefix k means "the first k steps applied";
/// prefix 0 is the pass-start partition.
struct PassTrace {
  std::size_t initial_cut = 0;
  std::vector<PassStep> steps;
  std::size_t best_prefix = 0;
  std::size_t pair_evaluations = 0;  // pairwise variant only

  std::size_t cut_at(std::size_t prefix) const {
    return prefix == 0 ? initial_cut : steps[prefix - 1].cut_after;
  }
  std::int64_t best_gain() const {
    return best_prefix == 0 ? 0 : steps[best_prefix - 1].cumulative_gain;
  }
  std::size_t best_cut() const { return cut_at(best_prefix); }
};

/// Earliest prefix with minimum cut among balanced prefixes. Prefix 0 is
/// always eligible.
std::size_t select_best_prefix(const PassTrace& trace);

/// Undo every step past trace.best_prefix, restoring `p` to that prefix.
void rollback(const Hypergraph& h, Partition& p, const PassTrace& trace);

/// Re-apply the first `prefix` steps of `trace` to a pass-start partition.
void replay(const Hypergraph& h, Partition& p, const PassTrace& trace, std::size_t prefix);

struct FmConfig {
  std::uint64_t seed = 1;
  TiePolicy tie_policy = TiePolicy::Random;
  /// nullopt runs passes until one fails to improve.
  std::optional<unsigned> max_passes = 100;
};

/// Called after every step of a pass with the live state. Test hook.
using StepObserver = std::function<void(const GainState&, const Partition&)>;

enum class Algorithm : std::uint8_t { Fm, Variant };

constexpr std::string_view to_string(Algorithm a) noexcept {
  return a == Algorithm::Fm ? "fm" : "fm_variant";
}

struct RunResult {
  std::string label;
  Algorithm algorithm = Algorithm::Fm;
  std::uint64_t seed = 0;
  std::size_t initial_cut = 0;
  std::size_t optimal_cut = 0;
  unsigned passes = 0;
  double elapsed_ms = 0.0;
  std::vector<Block> sides;
};

}  // namespace fmpart
