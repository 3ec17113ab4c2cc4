#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace tnp;
using tnp::testing::Q;

namespace {
AffineFunc af(long c, std::vector<long> g) {
  std::vector<Rational> gr(g.begin(), g.end());
  return {Rational(c), gr};
}
}  // namespace

TEST(SignPartition, Examples) {
  auto one = sign_partition(1, {af(0, {1})});
  ASSERT_EQ(one.size(), 3u);
  EXPECT_EQ(one[0].signs, (std::vector<int>{-1}));
  EXPECT_EQ(one[1].signs, (std::vector<int>{0}));
  EXPECT_EQ(one[1].dim, 0);
  EXPECT_EQ(one[2].dim, 1);

  EXPECT_EQ(sign_partition(2, {af(0, {1, 0}), af(0, {0, 1})}).size(), 9u);

  // {x, x - 1, 1}: x<0, x=0, 0<x<1, x=1, x>1
  auto five = sign_partition(1, {af(0, {1}), af(-1, {1}), af(1, {0})});
  EXPECT_EQ(five.size(), 5u);
  for (const auto& c : five) EXPECT_EQ(c.signs[2], 1);
}

TEST(SignPartition, WitnessesAreInsideTheirCells) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> v(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<AffineFunc> fs;
    for (int k = 0; k < 5; ++k) fs.push_back(af(v(rng), {v(rng), v(rng)}));
    for (const auto& c : sign_partition(2, fs)) {
      EXPECT_TRUE(c.region.contains(c.witness));
      EXPECT_EQ(polyhedron_dim(c.region), c.dim);
    }
  }
}

TEST(SignPartition, EveryPointInExactlyOneCell) {
  std::mt19937 rng(6);
  std::uniform_int_distribution<long> v(-3, 3);
  std::vector<AffineFunc> fs;
  for (int k = 0; k < 6; ++k) fs.push_back(af(v(rng), {v(rng), v(rng)}));
  // include lines through integer points so some samples land on them
  fs.push_back(af(0, {1, -1}));
  fs.push_back(af(-1, {0, 1}));
  auto cells = sign_partition(2, fs);
  std::uniform_int_distribution<long> coord(-4, 4);
  for (int k = 0; k < 100; ++k) {
    Point p = k % 2 ? tnp::testing::random_point(rng, 2, 4, 3) : Point{Q(coord(rng)), Q(coord(rng))};
    int hits = 0;
    for (const auto& c : cells) hits += c.region.contains(p);
    EXPECT_EQ(hits, 1);
  }
}

TEST(SignPartition, SortedBySignVector) {
  auto cells = sign_partition(2, {af(0, {1, 0}), af(0, {0, 1}), af(-1, {1, 1})});
  for (std::size_t i = 1; i < cells.size(); ++i) EXPECT_LT(cells[i - 1].signs, cells[i].signs);
}
