#include "fmpart/oracle.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace fmpart::oracle {

Result exact_min_cut_balanced(const Hypergraph& h, Balance balance) {
  const std::size_t n = h.cell_count();
  if (n > kMaxCells) {
    throw std::invalid_argument("oracle limited to " + std::to_string(kMaxCells) + " cells, got " +
                                std::to_string(n));
  }
  if (balance == Balance::ExactHalves && n % 2 != 0) {
    throw std::invalid_argument("exact halves needs an even cell count");
  }
  if (n == 0) return Result{0, {}};

  std::vector<std::uint32_t> net_masks;
  net_masks.reserve(h.net_count());
  for (NetId e = 0; e < h.net_count(); ++e) {
    std::uint32_t m = 0;
    for (CellId c : h.pins(e)) m |= 1u << c;
    if (std::popcount(m) >= 2) net_masks.push_back(m);
  }

  // Bit c of `b2` set means cell c is in B2; cell 0 always stays in B1.
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::uint32_t best_mask = 0;
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  for (std::uint64_t k = 0; k < limit; ++k) {
    const auto b2 = static_cast<std::uint32_t>(k << 1);
    const std::size_t s2 = static_cast<std::size_t>(std::popcount(b2));
    const std::size_t s1 = n - s2;
    const std::size_t diff = s1 > s2 ? s1 - s2 : s2 - s1;
    if (balance == Balance::ExactHalves ? diff != 0 : diff > 1) continue;
    const std::uint32_t b1 = all & ~b2;
    std::size_t cut = 0;
    for (std::uint32_t m : net_masks) {
      if ((m & b1) && (m & b2)) {
        if (++cut >= best) break;
      }
    }
    if (cut < best) {
      best = cut;
      best_mask = b2;
    }
  }

  Result r;
  r.optimum_cut = best;
  r.witness.resize(n);
  for (std::size_t c = 0; c < n; ++c) r.witness[c] = (best_mask >> c) & 1u ? Block::B2 : Block::B1;
  return r;
}

long delta_cut_move(const Hypergraph& h, std::span<const Block> sides, CellId c) {
  std::vector<Block> flipped(sides.begin(), sides.end());
  flipped[c] = other(flipped[c]);
  return static_cast<long>(count_cut(h, sides)) - static_cast<long>(count_cut(h, flipped));
}

long delta_cut_swap(const Hypergraph& h, std::span<const Block> sides, CellId u, CellId v) {
  if (sides[u] == sides[v]) throw std::invalid_argument("swap needs cells on opposite blocks");
  std::vector<Block> swapped(sides.begin(), sides.end());
  swapped[u] = other(swapped[u]);
  swapped[v] = other(swapped[v]);
  return static_cast<long>(count_cut(h, sides)) - static_cast<long>(count_cut(h, swapped));
}

}  // namespace fmpart::oracle
