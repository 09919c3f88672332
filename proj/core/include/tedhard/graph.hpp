#pragma once

#include <optional>
#include <vector>

#include "tedhard/cost.hpp"

namespace tedhard {

/// Undirected graph on nodes 1..n with exact integer weights on unordered
/// pairs. Reductions require it to be complete.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(std::size_t n);

  std::size_t size() const { return n_; }

  /// Throws std::out_of_range for i == j or an index outside 1..n.
  void set_weight(std::size_t i, std::size_t j, Cost w);
  bool has_weight(std::size_t i, std::size_t j) const;
  /// Throws std::out_of_range if the pair has no weight.
  const Cost& weight(std::size_t i, std::size_t j) const;

  bool is_complete() const;
  /// Largest |w| over present pairs (0 when there are none).
  Cost max_abs_weight() const;

 private:
  std::size_t slot(std::size_t i, std::size_t j) const;

  std::size_t n_ = 0;
  std::vector<std::optional<Cost>> w_;
};

}  // namespace tedhard
