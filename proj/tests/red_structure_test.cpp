#include <gtest/gtest.h>

#include <random>

#include "tedhard/red_structure.hpp"
#include "test_support.hpp"

namespace tedhard {
namespace {

using testing::random_caterpillar;
using testing::random_model;

// Node ids of a built caterpillar, by 1-based spine index.
struct Ids {
  std::vector<NodeId> spine, leaf;
};
Ids ids_of(const LabeledTree& t, CaterpillarSide side) {
  Ids out;
  const auto pos = caterpillar_positions(t, side);
  out.spine.resize(pos.size() / 2 + 1);
  out.leaf.resize(pos.size() / 2 + 1);
  for (NodeId v = 0; v < pos.size(); ++v) (pos[v].spine ? out.spine : out.leaf)[pos[v].index] = v;
  return out;
}

TEST(RedStructure, EmptyMatching) {
  const LabeledTree f = build_tree({{1, 2}, {3, 4}, CaterpillarSide::kLeft});
  const LabeledTree g = build_tree({{1, 2}, {3, 4}, CaterpillarSide::kRight});
  const auto rs = decompose_red_structure(f, g, Matching{});
  ASSERT_TRUE(rs);
  EXPECT_EQ(rs->p, 0u);
  EXPECT_EQ(rs->q, 0u);
  EXPECT_FALSE(rs->optional_spine_leaf_f);
  EXPECT_FALSE(rs->optional_spine_leaf_g);
}

TEST(RedStructure, SpinePrefixOnly) {
  const LabeledTree f = build_tree({{1, 2, 3}, {4, 5, 6}, CaterpillarSide::kLeft});
  const LabeledTree g = build_tree({{1, 2, 3}, {4, 5, 6}, CaterpillarSide::kRight});
  const Ids fi = ids_of(f, CaterpillarSide::kLeft), gi = ids_of(g, CaterpillarSide::kRight);
  const auto rs = decompose_red_structure(f, g, Matching{{{fi.spine[1], gi.spine[1]}, {fi.spine[3], gi.spine[2]}}});
  ASSERT_TRUE(rs);
  EXPECT_EQ(rs->p, 2u);
  EXPECT_EQ(rs->q, 0u);
  EXPECT_EQ(rs->spine_prefix_pairs[1], (std::pair<std::size_t, std::size_t>{3, 2}));
}

TEST(RedStructure, FullShape) {
  // f_1~g_1, then f_5~g'_2 and f'_2~g_5 around reversed leaves f'_3~g'_4, f'_4~g'_3.
  const Caterpillar fc{{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, CaterpillarSide::kLeft};
  const Caterpillar gc{{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, CaterpillarSide::kRight};
  const LabeledTree f = build_tree(fc), g = build_tree(gc);
  const Ids fi = ids_of(f, CaterpillarSide::kLeft), gi = ids_of(g, CaterpillarSide::kRight);
  Matching m{{{fi.spine[1], gi.spine[1]},
              {fi.spine[5], gi.leaf[2]},
              {fi.leaf[2], gi.spine[5]},
              {fi.leaf[3], gi.leaf[4]},
              {fi.leaf[4], gi.leaf[3]}}};
  ASSERT_TRUE(validate_matching(f, g, m));
  const auto rs = decompose_red_structure(f, g, m);
  ASSERT_TRUE(rs);
  EXPECT_EQ(rs->p, 1u);
  EXPECT_EQ(rs->q, 2u);
  EXPECT_EQ(*rs->optional_spine_leaf_f, (std::pair<std::size_t, std::size_t>{5, 2}));
  EXPECT_EQ(*rs->optional_spine_leaf_g, (std::pair<std::size_t, std::size_t>{2, 5}));
}

TEST(RedStructure, LeafOfLastSpinePairMayBeMatched) {
  // f_1~g_1 together with f'_1~g'_1 is a valid matching.
  const LabeledTree f = build_tree({{0}, {0}, CaterpillarSide::kLeft});
  const LabeledTree g = build_tree({{0}, {0}, CaterpillarSide::kRight});
  Matching m{{{0, 0}, {1, 1}}};
  ASSERT_TRUE(validate_matching(f, g, m));
  const auto rs = decompose_red_structure(f, g, m);
  ASSERT_TRUE(rs);
  EXPECT_EQ(rs->p, 1u);
  EXPECT_EQ(rs->q, 1u);
}

TEST(RedStructure, RejectsInvalidMatching) {
  const LabeledTree f = build_tree({{0, 0}, {0, 0}, CaterpillarSide::kLeft});
  const LabeledTree g = build_tree({{0, 0}, {0, 0}, CaterpillarSide::kRight});
  const Ids fi = ids_of(f, CaterpillarSide::kLeft), gi = ids_of(g, CaterpillarSide::kRight);
  // Leaves kept in the same order: crossing in one tree but not the other.
  Matching m{{{fi.leaf[1], gi.leaf[1]}, {fi.leaf[2], gi.leaf[2]}}};
  EXPECT_FALSE(decompose_red_structure(f, g, m));
}

TEST(RedStructure, RejectsNonCaterpillar) {
  const LabeledTree f = parse_tree("(0 (1) (2) (3))");
  EXPECT_THROW(decompose_red_structure(f, f, Matching{}), ShapeError);
}

TEST(RedStructure, EveryOptimalMatchingDecomposes) {
  std::mt19937_64 rng(31);
  BruteForceOptions opts;
  opts.collect_all_optimal = true;
  for (int iter = 0; iter < 150; ++iter) {
    const Label alphabet = 1 + rng() % 3;
    const LabeledTree f = build_tree(random_caterpillar(rng, 1 + rng() % 6, alphabet, CaterpillarSide::kLeft));
    const LabeledTree g = build_tree(random_caterpillar(rng, 1 + rng() % 6, alphabet, CaterpillarSide::kRight));
    const CostModel cm = random_model(rng, alphabet, -9, 3, 0.2);
    for (const Matching& m : brute_force_matching_all(f, g, cm, opts).all_optimal) {
      const auto rs = decompose_red_structure(f, g, m);
      ASSERT_TRUE(rs) << serialize_tree(f) << " vs " << serialize_tree(g);
      EXPECT_EQ(rs->p + rs->q + (rs->optional_spine_leaf_f ? 1 : 0) + (rs->optional_spine_leaf_g ? 1 : 0),
                m.size());
    }
  }
}

}  // namespace
}  // namespace tedhard
