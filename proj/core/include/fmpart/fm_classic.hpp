#pragma once

#include "fmpart/pass.hpp"

namespace fmpart {

/// Uniformly random assignment with |S(B1) - S(B2)| <= 1. B1 receives the
/// extra cell when the count is odd.
Partition random_initial_partition(const Hypergraph& h, Rng& rng);

/// One Fiduccia-Mattheyses pass: move the highest-gain unlocked cell of the
/// block picked by the size/gain rule until every cell is locked, then roll
/// `p` back to the best balanced prefix.
///
/// Block rule per step: B1 when G_max(B1) >= G_max(B2) and S(B1) >= S(B2);
/// otherwise B2 when S(B2) >= S(B1); otherwise B1. If the chosen block has
/// no unlocked cell left, the other block moves instead.
PassTrace fm_pass(const Hypergraph& h, Partition& p, const FmConfig& cfg, Rng& rng,
                  const StepObserver& observer = {});

/// Seeded multi-pass FM from a random balanced start. Passes repeat while the
/// last pass improved the cut and the pass cap is not reached.
RunResult fm_run(const Hypergraph& h, const FmConfig& cfg);

/// As fm_run, but from a caller-supplied starting partition.
RunResult fm_run_from(const Hypergraph& h, Partition start, const FmConfig& cfg, Rng& rng);

}  // namespace fmpart
