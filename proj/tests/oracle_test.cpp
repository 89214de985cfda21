#include "fmpart/oracle.hpp"

#include <gtest/gtest.h>

#include "support/fixtures.hpp"

namespace fmpart {
namespace {

TEST(Oracle, ExactMinCutExamples) {
  const auto fig = oracle::exact_min_cut_balanced(testing::fig1(), oracle::Balance::OffByOne);
  EXPECT_EQ(fig.optimum_cut, 1u);
  EXPECT_EQ(count_cut(testing::fig1(), fig.witness), 1u);
  EXPECT_EQ(fig.witness[0], Block::B1);

  const auto h4 = oracle::exact_min_cut_balanced(testing::h4(), oracle::Balance::ExactHalves);
  EXPECT_EQ(h4.optimum_cut, 0u);
  EXPECT_EQ(h4.witness, (std::vector<Block>{Block::B1, Block::B2, Block::B1, Block::B2}));

  const Hypergraph one = Hypergraph::build(std::vector<std::vector<CellId>>{}, 1);
  EXPECT_EQ(oracle::exact_min_cut_balanced(one, oracle::Balance::OffByOne).optimum_cut, 0u);
}

TEST(Oracle, Guards) {
  const Hypergraph big = Hypergraph::build(std::vector<std::vector<CellId>>{}, 25);
  EXPECT_THROW(oracle::exact_min_cut_balanced(big, oracle::Balance::OffByOne), std::invalid_argument);
  EXPECT_THROW(oracle::exact_min_cut_balanced(testing::fig1(), oracle::Balance::ExactHalves),
               std::invalid_argument);
  EXPECT_THROW(oracle::delta_cut_swap(testing::fig1(), testing::fig1_split(), 2, 3), std::invalid_argument);
}

TEST(Oracle, Deltas) {
  const Hypergraph h = testing::fig1();
  const auto s = testing::fig1_split();
  EXPECT_EQ(oracle::delta_cut_move(h, s, 4), -1);
  EXPECT_EQ(oracle::delta_cut_move(h, s, 0), 0);
  EXPECT_EQ(oracle::delta_cut_swap(h, s, 4, 0), -2);
  EXPECT_EQ(oracle::delta_cut_swap(h, s, 3, 0), -1);
  const Hypergraph iso = Hypergraph::build(std::vector<std::vector<CellId>>{{0, 1}}, 4);
  const std::vector<Block> is{Block::B1, Block::B2, Block::B1, Block::B2};
  EXPECT_EQ(oracle::delta_cut_move(iso, is, 2), 0);
  EXPECT_EQ(oracle::delta_cut_swap(iso, is, 2, 3), 0);
}

TEST(OracleProperty, AntisymmetryAndBalanceOrdering) {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 300; ++trial) {
    const Hypergraph h = testing::random_hypergraph(rng);
    auto sides = testing::random_sides(rng, h.cell_count());
    const CellId c = static_cast<CellId>(rng() % h.cell_count());
    const long d = oracle::delta_cut_move(h, sides, c);
    sides[c] = other(sides[c]);
    ASSERT_EQ(oracle::delta_cut_move(h, sides, c), -d);

    const auto loose = oracle::exact_min_cut_balanced(h, oracle::Balance::OffByOne);
    ASSERT_EQ(count_cut(h, loose.witness), loose.optimum_cut);
    if (h.cell_count() % 2 == 0) {
      const auto tight = oracle::exact_min_cut_balanced(h, oracle::Balance::ExactHalves);
      ASSERT_EQ(loose.optimum_cut, tight.optimum_cut);
    }
    // Pure: same answer twice.
    ASSERT_EQ(oracle::exact_min_cut_balanced(h, oracle::Balance::OffByOne).witness, loose.witness);
  }
}

}  // namespace
}  // namespace fmpart
