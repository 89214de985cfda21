#pragma once

#include <optional>

#include "fmpart/pass.hpp"

namespace fmpart {

/// Hypergraph with an isolated padding cell appended when the cell count is
/// odd, so both blocks can hold exactly m = ceil(|V| / 2) cells.
struct PaddedHypergraph {
  Hypergraph graph;
  std::optional<CellId> dummy;
  std::size_t original_cell_count = 0;

  std::size_t cells_per_block() const noexcept { return graph.cell_count() / 2; }
};

PaddedHypergraph pad_dummy(const Hypergraph& h);

/// Correction for cut nets shared by `u` (in B1) and `v` (in B2): each such
/// net that would leave the cutset if either cell moved alone contributes
/// 2 when it has exactly two pins and 1 otherwise.
/// Throws std::invalid_argument if u and v are on the same block.
int correct_term(const Hypergraph& h, const Partition& p, CellId u, CellId v);

/// Cut reduction of swapping u and v: G(u) + G(v) - correct_term(u, v),
/// with G taken from the live gain state.
int pair_gain(const Hypergraph& h, const Partition& p, const GainState& gains, CellId u, CellId v);

struct PairChoice {
  CellId u = 0;  // from B1
  CellId v = 0;  // from B2
  int gain = 0;
  std::size_t evaluations = 0;  // pair_gain evaluations spent
};

/// Highest pair_gain over all unlocked (B1, B2) pairs.
///
/// Both blocks are walked in nonincreasing gain order. Since correct_term is
/// nonnegative, G(u) + G(v) bounds the pair gain, so the walk over v stops
/// once the bound cannot beat the best pair found, and the walk over u stops
/// once G(u) + G_max(B2) cannot. Ties between evaluated pairs are broken
/// uniformly at random. Throws std::logic_error if a block has no unlocked cell.
PairChoice best_pair(const Hypergraph& h, const Partition& p, const GainState& gains, TiePolicy policy,
                     Rng& rng);

/// Random assignment with exactly half the cells in each block.
/// Throws std::invalid_argument for an odd cell count.
Partition random_equal_partition(const Hypergraph& h, Rng& rng);

/// One pass of the pairwise-swap variant: m times pick the best pair, swap
/// and lock both cells, update neighbor gains; then roll back to the best
/// prefix. Requires S(B1) == S(B2).
PassTrace variant_pass(const PaddedHypergraph& ph, Partition& p, const FmConfig& cfg, Rng& rng,
                       const StepObserver& observer = {});

/// Seeded multi-pass variant run. Cuts and the returned sides refer to the
/// unpadded hypergraph.
RunResult variant_run(const Hypergraph& h, const FmConfig& cfg);

/// As variant_run, starting from `start` on the padded graph.
RunResult variant_run_from(const PaddedHypergraph& ph, Partition start, const FmConfig& cfg, Rng& rng);

}  // namespace fmpart
