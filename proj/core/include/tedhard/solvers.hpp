#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "tedhard/cost.hpp"
#include "tedhard/cost_model.hpp"
#include "tedhard/tree.hpp"

namespace tedhard {

/// Matched (node-in-F, node-in-G) pairs.
struct Matching {
  std::vector<std::pair<NodeId, NodeId>> pairs;

  bool empty() const { return pairs.empty(); }
  std::size_t size() const { return pairs.size(); }
};

struct MatchingResult {
  Cost value{0};
  Matching matching;
};

/// True iff `m` is injective in both coordinates and every two pairs agree
/// on ancestor/descendant and left/right relations in F and G. Throws
/// std::out_of_range on a node id that does not belong to its tree.
bool validate_matching(const LabeledTree& f, const LabeledTree& g, const Matching& m);

/// Sum of match costs over the pairs of `m`.
Cost matching_cost(const LabeledTree& f, const LabeledTree& g, const CostModel& cm,
                   const Matching& m);

struct BruteForceOptions {
  /// Inputs larger than this (in either tree) are rejected.
  std::size_t max_nodes = 12;
  /// Also collect every matching that attains the optimum.
  bool collect_all_optimal = false;
};

struct BruteForceResult {
  MatchingResult best;
  std::vector<Matching> all_optimal;  // filled only on request
};

/// Exhaustive search over all valid matchings (including the empty one),
/// with branch-and-bound pruning.
BruteForceResult brute_force_matching_all(const LabeledTree& f, const LabeledTree& g,
                                          const CostModel& cm, BruteForceOptions opts = {});
MatchingResult brute_force_matching(const LabeledTree& f, const LabeledTree& g,
                                    const CostModel& cm, BruteForceOptions opts = {});

struct SolveOptions {
  /// Called with (finished keyroot pairs, total keyroot pairs) on large inputs.
  std::function<void(std::size_t, std::size_t)> progress;
  /// Skip witness reconstruction (value only).
  bool value_only = false;
};

/// Optimal matching via the keyroot/subforest dynamic program, where
/// unmatched nodes are free and a matched pair pays its match cost.
MatchingResult optimal_matching(const LabeledTree& f, const LabeledTree& g, const CostModel& cm,
                                const SolveOptions& opts = {});

/// Minimum delete/insert/relabel cost under a standard-formulation model.
Cost standard_ted(const LabeledTree& f, const LabeledTree& g, const CostModel& standard);

}  // namespace tedhard
