#pragma once

#include <cstddef>

#include "fmpart/hypergraph.hpp"

namespace fmpart::oracle {

/// exact_halves: |B1| == |B2| (even cell counts only).
/// off_by_one:   ||B1| - |B2|| <= 1.
enum class Balance { ExactHalves, OffByOne };

inline constexpr std::size_t kMaxCells = 24;

struct Result {
  std::size_t optimum_cut = 0;
  std::vector<Block> witness;
};

/// Exhaustive minimum cut over balanced bipartitions. Cell 0 is pinned to B1
/// (the cut is symmetric under relabeling), and the witness is the first
/// optimum in increasing bitmask order over cells 1..n-1.
/// Throws std::invalid_argument above kMaxCells cells, or for ExactHalves
/// with an odd cell count.
Result exact_min_cut_balanced(const Hypergraph& h, Balance balance);

/// cut(p) - cut(p with c flipped), by two full recounts.
long delta_cut_move(const Hypergraph& h, std::span<const Block> sides, CellId c);

/// cut(p) - cut(p with u and v flipped), by two full recounts.
/// Throws std::invalid_argument when u and v share a block.
long delta_cut_swap(const Hypergraph& h, std::span<const Block> sides, CellId u, CellId v);

}  // namespace fmpart::oracle
