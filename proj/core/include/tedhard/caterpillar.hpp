#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "tedhard/cost.hpp"
#include "tedhard/cost_model.hpp"
#include "tedhard/tree.hpp"

namespace tedhard {

/// kLeft: every spine node has children (next spine node, leaf), the layout
/// of F. kRight: children (leaf, next spine node), the layout of G. The last
/// spine node has its leaf as only child.
enum class CaterpillarSide { kLeft, kRight };

struct Caterpillar {
  std::vector<Label> spine;   // spine[0] is the root
  std::vector<Label> leaves;  // leaves[i] hangs below spine[i]
  CaterpillarSide side = CaterpillarSide::kLeft;

  std::size_t size() const { return spine.size(); }
  friend bool operator==(const Caterpillar&, const Caterpillar&) = default;
};

class ShapeError : public std::runtime_error {
 public:
  ShapeError(const std::string& what, NodeId node) : std::runtime_error(what), node_(node) {}
  NodeId node() const { return node_; }

 private:
  NodeId node_;
};

/// Reads a spine-with-one-leaf-per-node tree; throws ShapeError naming the
/// first node that breaks the layout. The empty tree gives an empty
/// caterpillar.
Caterpillar as_caterpillar(const LabeledTree& tree, CaterpillarSide side);
LabeledTree build_tree(const Caterpillar& c);

/// Where a node sits in a caterpillar: spine or leaf, with 1-based depth
/// index.
struct CaterpillarPosition {
  bool spine = true;
  std::size_t index = 0;
};
/// Positions indexed by node id; throws ShapeError like as_caterpillar.
std::vector<CaterpillarPosition> caterpillar_positions(const LabeledTree& tree,
                                                       CaterpillarSide side);

/// Dense (rows+1) x (cols+1) table of costs, indexed from 0.
struct CostTable {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Cost> cells;

  const Cost& at(std::size_t i, std::size_t j) const { return cells.at(i * (cols + 1) + j); }
};

/// R[i][j] = minimum total cost of pairs (s[i_1], t[j_1]), ..., (s[i_k], t[j_k])
/// with i_1 < ... < i_k <= i and j >= j_1 > ... > j_k (1-based), forbidden
/// pairs excluded; the empty selection gives 0. Built by divide and conquer
/// over the alignment grid in O(|s||t| log^2) time.
CostTable reverse_matching_table(std::span<const Label> s, std::span<const Label> t,
                                 const CostModel& cm);
/// Same table from one alignment DP per start column; cubic time.
CostTable reverse_matching_table_cubic(std::span<const Label> s, std::span<const Label> t,
                                       const CostModel& cm);

/// P[i][j] = best cost of matching an increasing subsequence of the spine
/// prefix f_1..f_i to one of g_1..g_j.
CostTable spine_prefix_table(const Caterpillar& f, const Caterpillar& g, const CostModel& cm);

/// Optimal matching value between a left caterpillar F and a right
/// caterpillar G. Costs depend only on labels.
Cost caterpillar_ted(const Caterpillar& f, const Caterpillar& g, const CostModel& cm);

}  // namespace tedhard
