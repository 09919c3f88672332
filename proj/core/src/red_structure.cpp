#include "tedhard/red_structure.hpp"

#include <algorithm>

namespace tedhard {

std::optional<RedStructure> decompose_red_structure(const LabeledTree& f, const LabeledTree& g,
                                                    const Matching& m) {
  const auto fpos = caterpillar_positions(f, CaterpillarSide::kLeft);
  const auto gpos = caterpillar_positions(g, CaterpillarSide::kRight);
  if (!validate_matching(f, g, m)) return std::nullopt;

  RedStructure rs;
  for (const auto& [v, w] : m.pairs) {
    const auto a = fpos[v];
    const auto b = gpos[w];
    const std::pair<std::size_t, std::size_t> idx{a.index, b.index};
    if (a.spine && b.spine) {
      rs.spine_prefix_pairs.push_back(idx);
    } else if (!a.spine && !b.spine) {
      rs.reversed_leaf_pairs.push_back(idx);
    } else if (a.spine) {
      if (rs.optional_spine_leaf_f) return std::nullopt;
      rs.optional_spine_leaf_f = idx;
    } else {
      if (rs.optional_spine_leaf_g) return std::nullopt;
      rs.optional_spine_leaf_g = idx;
    }
  }
  std::sort(rs.spine_prefix_pairs.begin(), rs.spine_prefix_pairs.end());
  std::sort(rs.reversed_leaf_pairs.begin(), rs.reversed_leaf_pairs.end());
  rs.p = rs.spine_prefix_pairs.size();
  rs.q = rs.reversed_leaf_pairs.size();

  for (std::size_t k = 1; k < rs.p; ++k) {
    if (rs.spine_prefix_pairs[k].second <= rs.spine_prefix_pairs[k - 1].second) return std::nullopt;
  }
  for (std::size_t k = 1; k < rs.q; ++k) {
    if (rs.reversed_leaf_pairs[k].second >= rs.reversed_leaf_pairs[k - 1].second) return std::nullopt;
  }

  const std::size_t a = rs.p ? rs.spine_prefix_pairs.back().first : 0;
  const std::size_t b = rs.p ? rs.spine_prefix_pairs.back().second : 0;
  // Open interval bounds for the leaves of part (2).
  std::size_t f_lo = a == 0 ? 0 : a - 1, f_hi = f.size() + 1;
  std::size_t g_lo = b == 0 ? 0 : b - 1, g_hi = g.size() + 1;
  if (const auto& sl = rs.optional_spine_leaf_f) {
    if (sl->first <= a || sl->second < std::max<std::size_t>(b, 1)) return std::nullopt;
    f_hi = sl->first;
    g_lo = sl->second;
  }
  if (const auto& ls = rs.optional_spine_leaf_g) {
    if (ls->second <= b || ls->first < std::max<std::size_t>(a, 1)) return std::nullopt;
    f_lo = ls->first;
    g_hi = ls->second;
  }
  for (const auto& [x, z] : rs.reversed_leaf_pairs) {
    if (x <= f_lo || x >= f_hi || z <= g_lo || z >= g_hi) return std::nullopt;
  }
  if (rs.optional_spine_leaf_f && rs.optional_spine_leaf_g) {
    if (rs.optional_spine_leaf_g->first >= rs.optional_spine_leaf_f->first) return std::nullopt;
    if (rs.optional_spine_leaf_f->second >= rs.optional_spine_leaf_g->second) return std::nullopt;
  }
  return rs;
}

}  // namespace tedhard
