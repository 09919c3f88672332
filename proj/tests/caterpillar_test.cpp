#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "tedhard/caterpillar.hpp"
#include "tedhard/solvers.hpp"
#include "test_support.hpp"

namespace tedhard {
namespace {

using testing::random_caterpillar;
using testing::random_model;

// Enumerates every selection i_1 < ... < i_k <= i, j >= j_1 > ... > j_k.
Cost exhaustive_reverse(const std::vector<Label>& s, const std::vector<Label>& t, std::size_t i,
                        std::size_t j, const CostModel& cm) {
  Cost best(0);
  std::function<void(std::size_t, std::size_t, Cost)> go = [&](std::size_t si, std::size_t tj,
                                                               Cost acc) {
    best = min(best, acc);
    // next pair uses s index > si (1-based) and t index < tj
    for (std::size_t a = si + 1; a <= i; ++a) {
      for (std::size_t b = 1; b < tj; ++b) {
        const Cost c = cm.match(s[a - 1], t[b - 1]);
        if (c.is_infinite()) continue;
        go(a, b, acc + c);
      }
    }
  };
  go(0, j + 1, Cost(0));
  return best;
}

std::vector<Label> random_word(std::mt19937_64& rng, std::size_t len, Label alphabet) {
  std::vector<Label> w(len);
  for (auto& x : w) x = rng() % alphabet;
  return w;
}

TEST(CaterpillarShape, BuildsLeftLayout) {
  Caterpillar c{{1, 2}, {5, 6}, CaterpillarSide::kLeft};
  EXPECT_EQ(serialize_tree(build_tree(c)), "(1 (2 (6)) (5))");
}

TEST(CaterpillarShape, BuildsRightLayout) {
  Caterpillar c{{1, 2}, {5, 6}, CaterpillarSide::kRight};
  EXPECT_EQ(serialize_tree(build_tree(c)), "(1 (5) (2 (6)))");
}

TEST(CaterpillarShape, LastSpineNodeKeepsItsLeaf) {
  const Caterpillar c = as_caterpillar(parse_tree("(1 (2 (3)) (4))"), CaterpillarSide::kLeft);
  EXPECT_EQ(c.spine, (std::vector<Label>{1, 2}));
  EXPECT_EQ(c.leaves, (std::vector<Label>{4, 3}));
}

TEST(CaterpillarShape, MissingLeafNamesNode) {
  try {
    as_caterpillar(parse_tree("(1 (2) (4))"), CaterpillarSide::kLeft);
    FAIL() << "expected shape error";
  } catch (const ShapeError& e) {
    EXPECT_EQ(e.node(), 1u);
  }
  EXPECT_THROW(as_caterpillar(parse_tree("(1)"), CaterpillarSide::kLeft), ShapeError);
  EXPECT_THROW(as_caterpillar(parse_tree("(1 (2) (3) (4))"), CaterpillarSide::kLeft), ShapeError);
  // Right layout read as left puts the spine in the leaf slot.
  EXPECT_THROW(as_caterpillar(parse_tree("(1 (5) (2 (6)))"), CaterpillarSide::kLeft), ShapeError);
}

TEST(CaterpillarShape, RoundTrip) {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 200; ++iter) {
    const auto side = iter % 2 ? CaterpillarSide::kLeft : CaterpillarSide::kRight;
    const Caterpillar c = random_caterpillar(rng, rng() % 10, 5, side);
    const LabeledTree t = build_tree(c);
    EXPECT_EQ(as_caterpillar(t, side), c);
    EXPECT_EQ(parse_tree(serialize_tree(t)), t);
  }
}

TEST(ReverseTable, SwapExample) {
  CostModel cm(2);
  cm.set_match(0, 0, Cost(-1));
  cm.set_match(1, 1, Cost(-1));
  const std::vector<Label> s{0, 1}, t{1, 0};
  const CostTable r = reverse_matching_table(s, t, cm);
  EXPECT_EQ(r.at(2, 2), Cost(-2));
  EXPECT_EQ(r.at(0, 2), Cost(0));
  EXPECT_EQ(r.at(2, 0), Cost(0));
}

TEST(ReverseTable, MatchesExhaustiveEnumeration) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    const Label alphabet = 1 + rng() % 3;
    const auto s = random_word(rng, rng() % 8, alphabet);
    const auto t = random_word(rng, rng() % 8, alphabet);
    const CostModel cm = random_model(rng, alphabet, -9, 9, 0.2);
    const CostTable fast = reverse_matching_table(s, t, cm);
    const CostTable cubic = reverse_matching_table_cubic(s, t, cm);
    for (std::size_t i = 0; i <= s.size(); ++i) {
      for (std::size_t j = 0; j <= t.size(); ++j) {
        const Cost want = exhaustive_reverse(s, t, i, j, cm);
        ASSERT_EQ(fast.at(i, j), want) << "i=" << i << " j=" << j;
        ASSERT_EQ(cubic.at(i, j), want);
      }
    }
  }
}

TEST(ReverseTable, FastMatchesCubicOnLargerInputs) {
  std::mt19937_64 rng(12);
  for (int iter = 0; iter < 30; ++iter) {
    const Label alphabet = 1 + rng() % 4;
    const auto s = random_word(rng, 1 + rng() % 70, alphabet);
    const auto t = random_word(rng, 1 + rng() % 70, alphabet);
    const CostModel cm = random_model(rng, alphabet, -20, 20, 0.3);
    const CostTable fast = reverse_matching_table(s, t, cm);
    const CostTable cubic = reverse_matching_table_cubic(s, t, cm);
    ASSERT_EQ(fast.cells, cubic.cells) << "iteration " << iter;
  }
}

TEST(ReverseTable, MonotoneInBothCoordinates) {
  std::mt19937_64 rng(13);
  const auto s = random_word(rng, 40, 3);
  const auto t = random_word(rng, 33, 3);
  const CostModel cm = random_model(rng, 3, -9, 9, 0.2);
  const CostTable r = reverse_matching_table(s, t, cm);
  for (std::size_t i = 0; i <= s.size(); ++i) {
    for (std::size_t j = 0; j <= t.size(); ++j) {
      if (i + 1 <= s.size()) EXPECT_LE(r.at(i + 1, j), r.at(i, j));
      if (j + 1 <= t.size()) EXPECT_LE(r.at(i, j + 1), r.at(i, j));
    }
  }
}

TEST(SpinePrefix, ForbiddenPairsGiveZero) {
  std::mt19937_64 rng(3);
  const Caterpillar f = random_caterpillar(rng, 5, 3, CaterpillarSide::kLeft);
  const Caterpillar g = random_caterpillar(rng, 4, 3, CaterpillarSide::kRight);
  const CostTable p = spine_prefix_table(f, g, CostModel(3));
  for (const Cost& c : p.cells) EXPECT_EQ(c, Cost(0));
}

TEST(SpinePrefix, MatchesBruteForceOnSpinePaths) {
  // Spine-only matchings of caterpillars are matchings of the two spine paths.
  std::mt19937_64 rng(4);
  for (int iter = 0; iter < 100; ++iter) {
    const Caterpillar f = random_caterpillar(rng, 1 + rng() % 6, 3, CaterpillarSide::kLeft);
    const Caterpillar g = random_caterpillar(rng, 1 + rng() % 6, 3, CaterpillarSide::kRight);
    const CostModel cm = random_model(rng, 3, -9, 9, 0.2);
    const CostTable p = spine_prefix_table(f, g, cm);
    for (std::size_t i = 0; i <= f.size(); ++i) {
      for (std::size_t j = 0; j <= g.size(); ++j) {
        const LabeledTree fp = LabeledTree::path(std::span(f.spine).first(i));
        const LabeledTree gp = LabeledTree::path(std::span(g.spine).first(j));
        ASSERT_EQ(p.at(i, j), brute_force_matching(fp, gp, cm).value);
      }
    }
  }
}

TEST(CaterpillarTed, SmallExample) {
  Caterpillar f{{1, 2}, {1, 2}, CaterpillarSide::kLeft};
  Caterpillar g{{1, 2}, {1, 2}, CaterpillarSide::kRight};
  CostModel cm(3);
  for (Label x = 0; x < 3; ++x) cm.set_match(x, x, Cost(-1));
  EXPECT_EQ(caterpillar_ted(f, g, cm), Cost(-3));
  EXPECT_EQ(caterpillar_ted(f, g, CostModel(3)), Cost(0));
}

TEST(CaterpillarTed, RejectsWrongSides) {
  Caterpillar f{{1}, {1}, CaterpillarSide::kRight};
  Caterpillar g{{1}, {1}, CaterpillarSide::kRight};
  EXPECT_THROW(caterpillar_ted(f, g, CostModel(2)), std::invalid_argument);
}

TEST(CaterpillarTed, AgreesWithGeneralSolvers) {
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 500; ++iter) {
    const Label alphabet = 1 + rng() % 4;
    const std::size_t n = 1 + rng() % 12;
    const std::size_t m = 1 + rng() % 12;
    const Caterpillar f = random_caterpillar(rng, n, alphabet, CaterpillarSide::kLeft);
    const Caterpillar g = random_caterpillar(rng, m, alphabet, CaterpillarSide::kRight);
    const CostModel cm = random_model(rng, alphabet, -9, 9, 0.2);
    const LabeledTree ft = build_tree(f), gt = build_tree(g);
    const Cost dp = optimal_matching(ft, gt, cm).value;
    ASSERT_EQ(caterpillar_ted(f, g, cm), dp)
        << serialize_tree(ft) << " vs " << serialize_tree(gt) << " iter " << iter;
    if (n <= 6 && m <= 6) ASSERT_EQ(brute_force_matching(ft, gt, cm).value, dp);
  }
}

TEST(CaterpillarTed, SymmetricUnderSwap) {
  std::mt19937_64 rng(22);
  for (int iter = 0; iter < 100; ++iter) {
    const Label alphabet = 1 + rng() % 3;
    const Caterpillar f = random_caterpillar(rng, 1 + rng() % 9, alphabet, CaterpillarSide::kLeft);
    const Caterpillar g = random_caterpillar(rng, 1 + rng() % 9, alphabet, CaterpillarSide::kRight);
    const CostModel cm = random_model(rng, alphabet, -9, 9, 0.2);
    CostModel transposed(alphabet);
    for (const auto& [key, c] : cm.match_entries()) transposed.set_match(key.second, key.first, c);
    // Mirroring both trees swaps the left and right layouts.
    Caterpillar fs{g.spine, g.leaves, CaterpillarSide::kLeft};
    Caterpillar gs{f.spine, f.leaves, CaterpillarSide::kRight};
    EXPECT_EQ(caterpillar_ted(f, g, cm), caterpillar_ted(fs, gs, transposed));
  }
}

}  // namespace
}  // namespace tedhard
