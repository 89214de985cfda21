#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "fmpart/types.hpp"

namespace fmpart {

/// Immutable pin structure of a netlist. Nets and cell incidence are stored
/// in compressed (offset + flat array) form; pins of a net are sorted and
/// distinct, nets of a cell are in ascending net order.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Throws std::invalid_argument on an out-of-range id or a cell listed
  /// twice in one net. Empty and single-pin nets are kept.
  static Hypergraph build(std::span<const std::vector<CellId>> nets, std::size_t cell_count);

  std::size_t cell_count() const noexcept { return cell_count_; }
  std::size_t net_count() const noexcept { return net_offsets_.empty() ? 0 : net_offsets_.size() - 1; }
  std::size_t pin_count() const noexcept { return pins_.size(); }

  /// Largest number of nets on any cell (0 for an empty hypergraph).
  std::size_t max_cell_degree() const noexcept { return max_degree_; }

  std::span<const CellId> pins(NetId n) const {
    return {pins_.data() + net_offsets_[n], pins_.data() + net_offsets_[n + 1]};
  }
  std::span<const NetId> nets_of(CellId c) const {
    return {cell_nets_.data() + cell_offsets_[c], cell_nets_.data() + cell_offsets_[c + 1]};
  }
  std::size_t degree(CellId c) const { return cell_offsets_[c + 1] - cell_offsets_[c]; }

  /// Cells sharing at least one net with `c`, ascending, excluding `c`.
  /// Throws std::out_of_range for an invalid id.
  std::vector<CellId> neighbors(CellId c) const;

  /// Pin lists in net order, suitable for build().
  std::vector<std::vector<CellId>> net_lists() const;

 private:
  std::size_t cell_count_ = 0;
  std::size_t max_degree_ = 0;
  std::vector<std::size_t> net_offsets_;
  std::vector<CellId> pins_;
  std::vector<std::size_t> cell_offsets_;
  std::vector<NetId> cell_nets_;
};

/// Number of nets with pins on both sides of `sides`, recounted from scratch.
std::size_t count_cut(const Hypergraph& h, std::span<const Block> sides);

/// Block assignment with incrementally maintained block sizes, per-net
/// occupancy and cut count.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument when `sides` does not have one entry per cell.
  Partition(const Hypergraph& h, std::vector<Block> sides);

  Block side(CellId c) const { return sides_[c]; }
  std::span<const Block> sides() const noexcept { return sides_; }
  std::size_t cell_count() const noexcept { return sides_.size(); }

  std::size_t block_size(Block b) const noexcept { return block_size_[index(b)]; }
  std::uint32_t pins_in(NetId n, Block b) const { return occupancy_[n][index(b)]; }
  std::size_t cut_count() const noexcept { return cut_; }

  bool balanced() const noexcept {
    auto a = block_size_[0], b = block_size_[1];
    return (a > b ? a - b : b - a) <= 1;
  }

  /// Flip `c` to the other block in time proportional to its degree.
  void apply_move(const Hypergraph& h, CellId c);

  bool operator==(const Partition&) const = default;

 private:
  std::vector<Block> sides_;
  std::array<std::size_t, 2> block_size_{0, 0};
  std::vector<std::array<std::uint32_t, 2>> occupancy_;
  std::size_t cut_ = 0;
};

}  // namespace fmpart
