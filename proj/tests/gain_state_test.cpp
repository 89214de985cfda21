#include "fmpart/gain_state.hpp"

#include <gtest/gtest.h>

#include "fmpart/oracle.hpp"
#include "support/fixtures.hpp"

namespace fmpart {
namespace {

using testing::fig1;
using testing::fig1_split;

TEST(ComputeGain, Fig1Examples) {
  const Hypergraph h = fig1();
  const Partition p(h, fig1_split());
  EXPECT_EQ(compute_gain(h, p, 4), -1);  // c5
  EXPECT_EQ(compute_gain(h, p, 0), 0);   // c1
  EXPECT_EQ(compute_gain(h, p, 3), -1);  // c4
  const Hypergraph iso = Hypergraph::build(std::vector<std::vector<CellId>>{{0, 1}}, 3);
  EXPECT_EQ(compute_gain(iso, Partition(iso, {Block::B1, Block::B1, Block::B2}), 2), 0);
}

TEST(ComputeGain, DegenerateNetsContributeNothing) {
  const Hypergraph h = Hypergraph::build(std::vector<std::vector<CellId>>{{0}, {}, {0}}, 2);
  const Partition p(h, {Block::B1, Block::B2});
  EXPECT_EQ(compute_gain(h, p, 0), 0);
}

TEST(GainState, InitFig1) {
  const Hypergraph h = fig1();
  const Partition p(h, fig1_split());
  const GainState gs(h, p);
  EXPECT_EQ(gs.gain(0), 0);
  EXPECT_EQ(gs.gain(1), 0);
  EXPECT_EQ(gs.gain(2), -1);
  EXPECT_EQ(gs.gain(3), -1);
  EXPECT_EQ(gs.gain(4), -1);
  EXPECT_EQ(gs.bucket(Block::B1).max_gain(), -1);
  EXPECT_EQ(gs.bucket(Block::B2).max_gain(), 0);
  EXPECT_EQ(gs.audit(h, p), "");
}

TEST(GainState, InitEmpty) {
  const Hypergraph h = Hypergraph::build(std::vector<std::vector<CellId>>{}, 0);
  const Partition p(h, {});
  const GainState gs(h, p);
  EXPECT_TRUE(gs.bucket(Block::B1).empty());
  EXPECT_FALSE(gs.bucket(Block::B2).max_gain());
}

TEST(GainState, MoveC5UpdatesNeighbors) {
  const Hypergraph h = fig1();
  Partition p(h, fig1_split());
  GainState gs(h, p);
  gs.move_and_update(h, p, 4);
  EXPECT_TRUE(gs.locked(4));
  EXPECT_EQ(p.cut_count(), 2u);
  EXPECT_EQ(gs.gain(3), 1);  // c4
  EXPECT_EQ(gs.gain(2), 1);  // c3
  EXPECT_EQ(gs.audit(h, p), "");
  EXPECT_THROW(gs.move_and_update(h, p, 4), std::logic_error);
}

TEST(GainState, MoveIsolatedCellChangesNothingElse) {
  const Hypergraph h = Hypergraph::build(std::vector<std::vector<CellId>>{{0, 1}}, 3);
  Partition p(h, {Block::B1, Block::B2, Block::B1});
  GainState gs(h, p);
  const int g0 = gs.gain(0), g1 = gs.gain(1);
  gs.move_and_update(h, p, 2);
  EXPECT_EQ(gs.gain(0), g0);
  EXPECT_EQ(gs.gain(1), g1);
}

TEST(GainState, SeededRandomPickIsReproducible) {
  const Hypergraph h = fig1();
  const Partition p(h, fig1_split());
  const GainState gs(h, p);
  Rng a(17), b(17);
  const auto first = gs.select_max(Block::B2, TiePolicy::Random, a);
  ASSERT_TRUE(first);
  EXPECT_TRUE(*first == 0 || *first == 1);
  EXPECT_EQ(first, gs.select_max(Block::B2, TiePolicy::Random, b));
}

TEST(GainProperty, MatchesOracleMoveDelta) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const Hypergraph h = testing::random_hypergraph(rng);
    const Partition p(h, testing::random_balanced_sides(rng, h.cell_count()));
    for (CellId c = 0; c < h.cell_count(); ++c) {
      const int g = compute_gain(h, p, c);
      ASSERT_EQ(g, oracle::delta_cut_move(h, p.sides(), c));
      ASSERT_LE(std::abs(g), static_cast<int>(h.max_cell_degree()));
    }
  }
}

TEST(GainProperty, IncrementalUpdatesMatchRecompute) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 500; ++trial) {
    const Hypergraph h = testing::random_hypergraph(rng);
    Partition p(h, testing::random_sides(rng, h.cell_count()));
    GainState gs(h, p);
    std::vector<CellId> order(h.cell_count());
    std::iota(order.begin(), order.end(), CellId{0});
    std::shuffle(order.begin(), order.end(), rng);
    for (CellId c : order) {
      gs.move_and_update(h, p, c);
      ASSERT_EQ(gs.audit(h, p), "") << "trial " << trial;
      ASSERT_EQ(p.cut_count(), count_cut(h, p.sides()));
    }
    EXPECT_EQ(gs.unlocked_count(), 0u);
  }
}

}  // namespace
}  // namespace fmpart
