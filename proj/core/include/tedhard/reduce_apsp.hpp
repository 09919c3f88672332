#pragma once

#include <optional>
#include <string>
#include <tuple>

#include "tedhard/cost.hpp"
#include "tedhard/cost_model.hpp"
#include "tedhard/graph.hpp"
#include "tedhard/solvers.hpp"
#include "tedhard/tree.hpp"

namespace tedhard {

/// Label ids of the triangle instance for a graph on n nodes. Left tree:
/// spine a_1..a_n, b_1..b_{n+1} with leaves a'_i, b'_k. Right tree: spine
/// c_1..c_n, d_1..d_{n+1} with leaves c'_j, d'_k. All labels are distinct.
struct TriangleLabels {
  std::size_t n = 0;

  Label a(std::size_t i) const { return static_cast<Label>(i - 1); }
  Label b(std::size_t k) const { return static_cast<Label>(n + k - 1); }
  Label a_leaf(std::size_t i) const { return static_cast<Label>(2 * n + i); }
  Label b_leaf(std::size_t k) const { return static_cast<Label>(3 * n + k); }
  Label c(std::size_t j) const { return right() + a(j); }
  Label d(std::size_t k) const { return right() + b(k); }
  Label c_leaf(std::size_t j) const { return right() + a_leaf(j); }
  Label d_leaf(std::size_t k) const { return right() + b_leaf(k); }
  Label right() const { return static_cast<Label>(4 * n + 2); }
  Label alphabet_size() const { return static_cast<Label>(8 * n + 4); }
};

struct TriangleKey {
  Cost M;
  std::size_t n = 0;
  Cost max_abs_weight;
};

struct TriangleInstance {
  LabeledTree f;
  LabeledTree g;
  CostModel cm;
  TriangleKey key;
};

/// M = 16 (n + 1) (max|w| + 1).
Cost choose_M_apsp(const WeightedGraph& g);

/// Weight used where a cost formula reads w(i, i): large enough that a
/// triangle with a repeated node never beats a genuine one.
Cost diagonal_weight(const Cost& max_abs_weight);

/// Throws std::invalid_argument for an incomplete graph, n < 1 or M <= 0.
TriangleInstance build_negative_triangle_instance(const WeightedGraph& g, const Cost& M);

struct TriangleExtraction {
  Cost value;
  /// Set when the value is outside [-3 max|w|, 3 max|w|], which means M was
  /// too small for the structure argument to hold.
  std::optional<std::string> diagnostic;
};

/// matching_value + 3 M^2.
TriangleExtraction extract_min_triangle(const TriangleKey& key, const Cost& matching_value);

/// Reads (i, j, k) off an optimal matching: b_{k+1} ~ c'_j and
/// a'_i ~ d_{k+1}. nullopt when those pairs are not both present.
std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> triangle_from_matching(
    const TriangleInstance& inst, const Matching& m);

/// Minimum weight over triples of distinct nodes; throws for n < 3.
Cost brute_min_triangle(const WeightedGraph& g);

enum class TriangleMethod { kBruteForce, kReduction };
/// True iff some triangle has negative weight.
bool detect_negative_triangle(const WeightedGraph& g,
                              TriangleMethod method = TriangleMethod::kBruteForce);

}  // namespace tedhard
