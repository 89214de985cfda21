#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fmpart/gain_bucket.hpp"
#include "fmpart/hypergraph.hpp"

namespace fmpart {

/// Exact cut reduction if `c` alone moved to the other block: nets where `c`
/// is the only pin on its side, minus nets lying entirely on its side.
/// Nets with fewer than two pins contribute nothing.
int compute_gain(const Hypergraph& h, const Partition& p, CellId c);

/// Per-cell gains, lock flags and one gain bucket per block for a single pass.
/// Only unlocked cells are bucketed; gains of locked cells go stale.
class GainState {
 public:
  GainState(const Hypergraph& h, const Partition& p);

  int gain(CellId c) const { return gain_[c]; }
  bool locked(CellId c) const { return locked_[c] != 0; }
  std::size_t unlocked_count() const noexcept { return unlocked_; }
  const GainBucket& bucket(Block b) const { return bucket_[index(b)]; }

  std::optional<CellId> select_max(Block b, TiePolicy policy, Rng& rng) const {
    return bucket_[index(b)].select_max(policy, rng);
  }

  /// Lock `c`, move it in `p`, and apply the FM delta rule to the gains of
  /// its unlocked neighbors. Throws std::logic_error if `c` is locked.
  void move_and_update(const Hypergraph& h, Partition& p, CellId c);

  /// Recompute every unlocked gain from scratch and audit both buckets.
  /// Returns a description of the first discrepancy, or an empty string.
  std::string audit(const Hypergraph& h, const Partition& p) const;

 private:
  void bump(CellId c, int delta);

  std::vector<int> gain_;
  std::vector<unsigned char> locked_;
  std::array<GainBucket, 2> bucket_;
  std::size_t unlocked_ = 0;
};

}  // namespace fmpart
