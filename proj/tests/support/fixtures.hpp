#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "fmpart/hypergraph.hpp"

namespace fmpart::testing {

// Circuit of five components c1..c5 (ids 0..4) with nets {c4,c5}, {c3,c5},
// {c1,c2,c5}. Every net contains c5.
inline Hypergraph fig1() { return Hypergraph::build(std::vector<std::vector<CellId>>{{3, 4}, {2, 4}, {0, 1, 4}}, 5); }

// B1 = {c3,c4,c5}, B2 = {c1,c2}; cut 1.
inline std::vector<Block> fig1_split() {
  using enum Block;
  return {B2, B2, B1, B1, B1};
}

// a,b,c,d = 0..3 with nets {a,c}, {b,d}.
inline Hypergraph h4() { return Hypergraph::build(std::vector<std::vector<CellId>>{{0, 2}, {1, 3}}, 4); }

// B1 = {a,b}, B2 = {c,d}; cut 2.
inline std::vector<Block> h4_split() {
  using enum Block;
  return {B1, B1, B2, B2};
}

inline Hypergraph h2() { return Hypergraph::build(std::vector<std::vector<CellId>>{{0, 1}}, 2); }

struct RandomShape {
  std::size_t min_cells = 2;
  std::size_t max_cells = 12;
  std::size_t max_nets = 20;
  std::size_t min_pins = 1;
  std::size_t max_pins = 6;
};

inline Hypergraph random_hypergraph(std::mt19937_64& rng, const RandomShape& shape = {}) {
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  const std::size_t cells = pick(shape.min_cells, shape.max_cells);
  const std::size_t nets = pick(0, shape.max_nets);
  std::vector<CellId> ids(cells);
  std::iota(ids.begin(), ids.end(), CellId{0});
  std::vector<std::vector<CellId>> lists;
  for (std::size_t n = 0; n < nets; ++n) {
    const std::size_t k = std::min(cells, pick(shape.min_pins, shape.max_pins));
    std::shuffle(ids.begin(), ids.end(), rng);
    lists.emplace_back(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return Hypergraph::build(lists, cells);
}

// Random assignment with block sizes differing by at most one.
inline std::vector<Block> random_balanced_sides(std::mt19937_64& rng, std::size_t cells) {
  std::vector<Block> sides(cells, Block::B2);
  for (std::size_t i = 0; i < (cells + (rng() & 1)) / 2; ++i) sides[i] = Block::B1;
  std::shuffle(sides.begin(), sides.end(), rng);
  return sides;
}

inline std::vector<Block> random_sides(std::mt19937_64& rng, std::size_t cells) {
  std::vector<Block> sides(cells);
  for (auto& s : sides) s = (rng() & 1) ? Block::B2 : Block::B1;
  return sides;
}

}  // namespace fmpart::testing
