#include "fmpart/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fmpart {

Hypergraph Hypergraph::build(std::span<const std::vector<CellId>> nets, std::size_t cell_count) {
  Hypergraph h;
  h.cell_count_ = cell_count;
  h.net_offsets_.reserve(nets.size() + 1);
  h.net_offsets_.push_back(0);

  std::vector<std::size_t> degree(cell_count, 0);
  for (std::size_t n = 0; n < nets.size(); ++n) {
    std::vector<CellId> pins = nets[n];
    for (CellId c : pins) {
      if (c >= cell_count) {
        throw std::invalid_argument("net " + std::to_string(n) + ": cell id " + std::to_string(c) +
                                    " out of range (cell count " + std::to_string(cell_count) + ")");
      }
    }
    std::sort(pins.begin(), pins.end());
    if (std::adjacent_find(pins.begin(), pins.end()) != pins.end()) {
      throw std::invalid_argument("net " + std::to_string(n) + " lists a cell more than once");
    }
    for (CellId c : pins) ++degree[c];
    h.pins_.insert(h.pins_.end(), pins.begin(), pins.end());
    h.net_offsets_.push_back(h.pins_.size());
  }

  h.cell_offsets_.assign(cell_count + 1, 0);
  for (std::size_t c = 0; c < cell_count; ++c) {
    h.cell_offsets_[c + 1] = h.cell_offsets_[c] + degree[c];
    h.max_degree_ = std::max(h.max_degree_, degree[c]);
  }
  h.cell_nets_.resize(h.pins_.size());
  std::vector<std::size_t> fill(h.cell_offsets_.begin(), h.cell_offsets_.end() - 1);
  for (NetId n = 0; n < nets.size(); ++n) {
    for (CellId c : h.pins(n)) h.cell_nets_[fill[c]++] = n;
  }
  return h;
}

std::vector<CellId> Hypergraph::neighbors(CellId c) const {
  if (c >= cell_count_) throw std::out_of_range("cell id " + std::to_string(c) + " out of range");
  std::vector<CellId> out;
  for (NetId n : nets_of(c)) {
    for (CellId other : pins(n)) {
      if (other != c) out.push_back(other);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<CellId>> Hypergraph::net_lists() const {
  std::vector<std::vector<CellId>> out;
  out.reserve(net_count());
  for (NetId n = 0; n < net_count(); ++n) {
    auto p = pins(n);
    out.emplace_back(p.begin(), p.end());
  }
  return out;
}

std::size_t count_cut(const Hypergraph& h, std::span<const Block> sides) {
  std::size_t cut = 0;
  for (NetId n = 0; n < h.net_count(); ++n) {
    bool in_b1 = false, in_b2 = false;
    for (CellId c : h.pins(n)) {
      (sides[c] == Block::B1 ? in_b1 : in_b2) = true;
    }
    if (in_b1 && in_b2) ++cut;
  }
  return cut;
}

Partition::Partition(const Hypergraph& h, std::vector<Block> sides) : sides_(std::move(sides)) {
  if (sides_.size() != h.cell_count()) {
    throw std::invalid_argument("partition has " + std::to_string(sides_.size()) + " entries for " +
                                std::to_string(h.cell_count()) + " cells");
  }
  for (Block b : sides_) ++block_size_[index(b)];
  occupancy_.assign(h.net_count(), {0, 0});
  for (NetId n = 0; n < h.net_count(); ++n) {
    auto& occ = occupancy_[n];
    for (CellId c : h.pins(n)) ++occ[index(sides_[c])];
    if (occ[0] > 0 && occ[1] > 0) ++cut_;
  }
}

void Partition::apply_move(const Hypergraph& h, CellId c) {
  const Block from = sides_[c];
  const Block to = other(from);
  for (NetId n : h.nets_of(c)) {
    auto& occ = occupancy_[n];
    const bool was_cut = occ[0] > 0 && occ[1] > 0;
    --occ[index(from)];
    ++occ[index(to)];
    const bool is_cut = occ[0] > 0 && occ[1] > 0;
    if (was_cut != is_cut) {
      if (is_cut) ++cut_;
      else --cut_;
    }
  }
  sides_[c] = to;
  --block_size_[index(from)];
  ++block_size_[index(to)];
}

}  // namespace fmpart
