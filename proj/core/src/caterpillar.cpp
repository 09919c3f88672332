#include "tedhard/caterpillar.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "tedhard/detail/num.hpp"
#include "tedhard/detail/reverse_table.hpp"

namespace tedhard {
namespace {

std::string describe(const LabeledTree& t, NodeId v) {
  return "node " + std::to_string(v) + " (label " + std::to_string(t.label(v)) + ")";
}

// Walks the spine; calls visit(spine node, leaf node, 1-based index).
template <class Visit>
void walk_caterpillar(const LabeledTree& t, CaterpillarSide side, Visit visit) {
  if (t.empty()) return;
  NodeId v = t.root();
  for (std::size_t index = 1;; ++index) {
    auto kids = t.children(v);
    if (kids.empty()) throw ShapeError("spine " + describe(t, v) + " has no leaf", v);
    if (kids.size() > 2) throw ShapeError("spine " + describe(t, v) + " has more than two children", v);
    NodeId leaf = kids.size() == 1 ? kids[0] : (side == CaterpillarSide::kLeft ? kids[1] : kids[0]);
    NodeId next = kids.size() == 1 ? kNoNode : (side == CaterpillarSide::kLeft ? kids[0] : kids[1]);
    if (!t.children(leaf).empty()) {
      throw ShapeError("leaf position of spine " + describe(t, v) + " holds inner " +
                           describe(t, leaf),
                       leaf);
    }
    visit(v, leaf, index);
    if (next == kNoNode) return;
    v = next;
  }
}

std::vector<Label> node_labels(const Caterpillar& c) {
  std::vector<Label> out(c.spine);
  out.insert(out.end(), c.leaves.begin(), c.leaves.end());
  return out;
}

template <class T>
using Table = std::vector<T>;

template <class T>
Table<T> spine_prefix(const Caterpillar& f, const Caterpillar& g,
                      const detail::PairTable<T>& pt) {
  using N = detail::Num<T>;
  const std::size_t n = f.size(), m = g.size();
  Table<T> p((n + 1) * (m + 1), N::zero());
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t fi = pt.left_index(f.spine[i - 1]);
    for (std::size_t j = 1; j <= m; ++j) {
      T v = p[(i - 1) * (m + 1) + j];
      if (p[i * (m + 1) + j - 1] < v) v = p[i * (m + 1) + j - 1];
      T cand = N::add(p[(i - 1) * (m + 1) + j - 1], pt.at(fi, pt.right_index(g.spine[j - 1])));
      if (cand < v) v = std::move(cand);
      p[i * (m + 1) + j] = std::move(v);
    }
  }
  return p;
}

template <class T>
CostTable to_cost_table(std::size_t n, std::size_t m, const Table<T>& t) {
  CostTable out;
  out.rows = n;
  out.cols = m;
  out.cells.reserve(t.size());
  for (const T& v : t) out.cells.push_back(detail::Num<T>::to_cost(v));
  return out;
}

template <class T>
std::vector<T> pair_costs(std::span<const Label> s, std::span<const Label> t,
                          const detail::PairTable<T>& pt) {
  std::vector<T> out;
  out.reserve(s.size() * t.size());
  for (Label a : s) {
    const std::size_t ai = pt.left_index(a);
    for (Label b : t) out.push_back(pt.at(ai, pt.right_index(b)));
  }
  return out;
}

detail::ScalarKind scalar_for(std::span<const Label> s, std::span<const Label> t,
                              const CostModel& cm) {
  return detail::choose_scalar(detail::matching_magnitude_bound(
      std::vector<Label>(s.begin(), s.end()), std::vector<Label>(t.begin(), t.end()), cm));
}

template <class T>
CostTable reverse_table_as(std::span<const Label> s, std::span<const Label> t,
                           const CostModel& cm) {
  const detail::PairTable<T> pt(cm, {s.begin(), s.end()}, {t.begin(), t.end()});
  const std::vector<T> costs = pair_costs<T>(s, t, pt);
  return to_cost_table(s.size(), t.size(),
                       detail::ReverseTableBuilder<T>(s.size(), t.size(), costs).build());
}

// Optimal matchings between caterpillars have this shape (indices 1-based):
// a chain of spine-spine pairs ending at (a, b); below it, optionally
// f_y ~ g'_j0 and f'_x0 ~ g_y', and leaf-leaf pairs in reversed order whose
// F leaves lie strictly between x0 and y and whose G leaves lie strictly
// between j0 and y' (from max(a,1) / max(b,1) when x0 / j0 is absent).
// y may be replaced by the deepest spine node carrying the same label,
// which only widens the leaf range; likewise y'.
template <class T>
Cost caterpillar_ted_as(const Caterpillar& f, const Caterpillar& g, const CostModel& cm) {
  using N = detail::Num<T>;
  const std::size_t n = f.size(), m = g.size();
  const detail::PairTable<T> pt(cm, node_labels(f), node_labels(g));
  auto cost = [&](Label a, Label b) -> const T& {
    return pt.at(pt.left_index(a), pt.right_index(b));
  };

  // best[u][v] = min over spine-chain ends (a, b) with a <= u, b <= v (or
  // no chain at all) of the chain cost.
  const Table<T> prefix = spine_prefix<T>(f, g, pt);
  const std::size_t w = m + 1;
  Table<T> best((n + 1) * w, N::zero());
  for (std::size_t a = 1; a <= n; ++a) {
    for (std::size_t b = 1; b <= m; ++b) {
      T v = N::add(prefix[(a - 1) * w + b - 1], cost(f.spine[a - 1], g.spine[b - 1]));
      if (best[(a - 1) * w + b] < v) v = best[(a - 1) * w + b];
      if (best[a * w + b - 1] < v) v = best[a * w + b - 1];
      best[a * w + b] = std::move(v);
    }
  }

  // Deepest spine position per label, plus n+1 / m+1 for "no such pair".
  auto anchors = [](const std::vector<Label>& spine) {
    std::map<Label, std::size_t> deepest;
    for (std::size_t i = 0; i < spine.size(); ++i) deepest[spine[i]] = i + 1;
    std::vector<std::size_t> out;
    for (const auto& [label, pos] : deepest) out.push_back(pos);
    out.push_back(spine.size() + 1);
    return out;
  };

  T answer = N::zero();
  for (std::size_t y : anchors(f.spine)) {
    const bool has_y = y <= n;
    std::vector<Label> s(f.leaves.rbegin() + static_cast<std::ptrdiff_t>(n - (y - 1)),
                         f.leaves.rend());
    for (std::size_t yg : anchors(g.spine)) {
      const bool has_yg = yg <= m;
      std::vector<Label> t(g.leaves.rbegin() + static_cast<std::ptrdiff_t>(m - (yg - 1)),
                           g.leaves.rend());
      const std::vector<T> costs = pair_costs<T>(s, t, pt);
      const std::vector<T> r = detail::ReverseTableBuilder<T>(s.size(), t.size(), costs).build();
      const std::size_t rw = t.size() + 1;

      // F side: u is x0 when f'_x0 ~ g_y' is present, else the chain bound.
      const std::size_t u_lo = has_yg ? 1 : 0;
      const std::size_t v_lo = has_y ? 1 : 0;
      for (std::size_t u = u_lo; u + 1 <= y; ++u) {
        T cost_u = has_yg ? cost(f.leaves[u - 1], g.spine[yg - 1]) : N::zero();
        if (N::is_inf(cost_u)) continue;
        const std::size_t count_f = has_yg ? y - 1 - u : y - std::max<std::size_t>(u, 1);
        for (std::size_t v = v_lo; v + 1 <= yg; ++v) {
          const T& cost_v = has_y ? cost(f.spine[y - 1], g.leaves[v - 1]) : N::zero();
          if (N::is_inf(cost_v)) continue;
          const std::size_t count_g = has_y ? yg - 1 - v : yg - std::max<std::size_t>(v, 1);
          T total = N::add(N::add(best[u * w + v], cost_u), N::add(cost_v, r[count_f * rw + count_g]));
          if (total < answer) answer = std::move(total);
        }
      }
    }
  }
  return N::to_cost(answer);
}

void require_side(const Caterpillar& c, CaterpillarSide side, const char* which) {
  if (c.side != side) throw std::invalid_argument(std::string(which) + " has the wrong side");
  if (c.spine.size() != c.leaves.size()) {
    throw std::invalid_argument(std::string(which) + " has mismatched spine and leaf counts");
  }
}

}  // namespace

Caterpillar as_caterpillar(const LabeledTree& tree, CaterpillarSide side) {
  Caterpillar c;
  c.side = side;
  walk_caterpillar(tree, side, [&](NodeId v, NodeId leaf, std::size_t) {
    c.spine.push_back(tree.label(v));
    c.leaves.push_back(tree.label(leaf));
  });
  return c;
}

std::vector<CaterpillarPosition> caterpillar_positions(const LabeledTree& tree,
                                                       CaterpillarSide side) {
  std::vector<CaterpillarPosition> out(tree.size());
  walk_caterpillar(tree, side, [&](NodeId v, NodeId leaf, std::size_t index) {
    out[v] = {true, index};
    out[leaf] = {false, index};
  });
  return out;
}

LabeledTree build_tree(const Caterpillar& c) {
  if (c.spine.size() != c.leaves.size()) {
    throw std::invalid_argument("spine and leaf sequences differ in length");
  }
  LabeledTree t;
  if (c.spine.empty()) return t;
  // Node ids follow preorder, as parse_tree assigns them.
  std::vector<NodeId> spine_ids;
  NodeId v = t.add_root(c.spine[0]);
  spine_ids.push_back(v);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.side == CaterpillarSide::kRight) t.add_child(spine_ids[i], c.leaves[i]);
    if (i + 1 < c.size()) spine_ids.push_back(t.add_child(spine_ids[i], c.spine[i + 1]));
  }
  if (c.side == CaterpillarSide::kLeft) {
    for (std::size_t i = c.size(); i-- > 0;) t.add_child(spine_ids[i], c.leaves[i]);
  }
  return t;
}

CostTable reverse_matching_table(std::span<const Label> s, std::span<const Label> t,
                                 const CostModel& cm) {
  switch (scalar_for(s, t, cm)) {
    case detail::ScalarKind::kInt64:
      return reverse_table_as<std::int64_t>(s, t, cm);
    case detail::ScalarKind::kInt128:
      return reverse_table_as<__int128>(s, t, cm);
    case detail::ScalarKind::kExact:
      break;
  }
  return reverse_table_as<Cost>(s, t, cm);
}

CostTable reverse_matching_table_cubic(std::span<const Label> s, std::span<const Label> t,
                                       const CostModel& cm) {
  const std::size_t n = s.size(), m = t.size();
  CostTable out;
  out.rows = n;
  out.cols = m;
  out.cells.assign((n + 1) * (m + 1), Cost(0));
  // For each j, align s[1..] with t[j], t[j-1], ..., t[1].
  std::vector<Cost> dp((n + 1) * (m + 1));
  for (std::size_t j = 1; j <= m; ++j) {
    for (std::size_t i = 0; i <= n; ++i) dp[i * (m + 1)] = Cost(0);
    for (std::size_t k = 1; k <= j; ++k) dp[k] = Cost(0);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t k = 1; k <= j; ++k) {
        Cost v = min(dp[(i - 1) * (m + 1) + k], dp[i * (m + 1) + k - 1]);
        v = min(v, dp[(i - 1) * (m + 1) + k - 1] + cm.match(s[i - 1], t[j - k]));
        dp[i * (m + 1) + k] = v;
      }
      out.cells[i * (m + 1) + j] = dp[i * (m + 1) + j];
    }
  }
  return out;
}

CostTable spine_prefix_table(const Caterpillar& f, const Caterpillar& g, const CostModel& cm) {
  const detail::PairTable<Cost> pt(cm, f.spine, g.spine);
  return to_cost_table(f.size(), g.size(), spine_prefix<Cost>(f, g, pt));
}

Cost caterpillar_ted(const Caterpillar& f, const Caterpillar& g, const CostModel& cm) {
  require_side(f, CaterpillarSide::kLeft, "left caterpillar");
  require_side(g, CaterpillarSide::kRight, "right caterpillar");
  if (f.size() == 0 || g.size() == 0) return Cost(0);
  switch (scalar_for(node_labels(f), node_labels(g), cm)) {
    case detail::ScalarKind::kInt64:
      return caterpillar_ted_as<std::int64_t>(f, g, cm);
    case detail::ScalarKind::kInt128:
      return caterpillar_ted_as<__int128>(f, g, cm);
    case detail::ScalarKind::kExact:
      break;
  }
  return caterpillar_ted_as<Cost>(f, g, cm);
}

}  // namespace tedhard
