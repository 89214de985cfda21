#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace fmpart {

using CellId = std::uint32_t;
using NetId = std::uint32_t;

/// One of the two blocks of a bipartition.
enum class Block : std::uint8_t { B1 = 0, B2 = 1 };

constexpr Block other(Block b) noexcept { return b == Block::B1 ? Block::B2 : Block::B1; }
constexpr std::size_t index(Block b) noexcept { return static_cast<std::size_t>(b); }

/// How a cell is picked among several cells sharing the maximum gain.
enum class TiePolicy : std::uint8_t { Random, Fifo, Lifo };

constexpr std::string_view to_string(TiePolicy t) noexcept {
  switch (t) {
    case TiePolicy::Random: return "random";
    case TiePolicy::Fifo: return "fifo";
    case TiePolicy::Lifo: return "lifo";
  }
  return "?";
}

using Rng = std::mt19937_64;

}  // namespace fmpart
