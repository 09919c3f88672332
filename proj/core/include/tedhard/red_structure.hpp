#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tedhard/caterpillar.hpp"
#include "tedhard/solvers.hpp"

namespace tedhard {

/// Shape of a matching between a left caterpillar F and a right caterpillar
/// G. Pairs are given as 1-based (F index, G index) along the spines.
///   (1) spine f_i ~ spine g_j, increasing in both coordinates;
///   (2) leaf f'_i ~ leaf g'_j, increasing in F and decreasing in G;
///   (3) optionally spine f_y ~ leaf g'_j0 and leaf f'_x0 ~ spine g_y'.
/// With (a, b) the last pair of (1), every other index is at least a in F
/// and at least b in G; the (3) spine indices exceed a and b. Leaves of (2)
/// lie strictly between x0 and y in F and strictly between j0 and y' in G.
struct RedStructure {
  std::size_t p = 0;
  std::size_t q = 0;
  std::vector<std::pair<std::size_t, std::size_t>> spine_prefix_pairs;
  std::vector<std::pair<std::size_t, std::size_t>> reversed_leaf_pairs;
  std::optional<std::pair<std::size_t, std::size_t>> optional_spine_leaf_f;  // (y, j0)
  std::optional<std::pair<std::size_t, std::size_t>> optional_spine_leaf_g;  // (x0, y')
};

/// Splits `m` into the three parts above, or returns nullopt if it does not
/// have that shape (including invalid matchings). Throws ShapeError when F
/// or G is not a caterpillar of the expected side.
std::optional<RedStructure> decompose_red_structure(const LabeledTree& f, const LabeledTree& g,
                                                    const Matching& m);

}  // namespace tedhard
