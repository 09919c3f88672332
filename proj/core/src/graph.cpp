#include "tedhard/graph.hpp"

#include <stdexcept>
#include <string>

namespace tedhard {

WeightedGraph::WeightedGraph(std::size_t n) : n_(n), w_(n * (n + 1) / 2) {}

std::size_t WeightedGraph::slot(std::size_t i, std::size_t j) const {
  if (i == j || i < 1 || j < 1 || i > n_ || j > n_) {
    throw std::out_of_range("no edge slot for pair (" + std::to_string(i) + ", " +
                            std::to_string(j) + ")");
  }
  if (i > j) std::swap(i, j);
  return (j - 1) * j / 2 + (i - 1);
}

void WeightedGraph::set_weight(std::size_t i, std::size_t j, Cost w) {
  if (w.is_infinite()) throw std::invalid_argument("edge weights must be finite");
  w_[slot(i, j)] = std::move(w);
}

bool WeightedGraph::has_weight(std::size_t i, std::size_t j) const {
  return w_[slot(i, j)].has_value();
}

const Cost& WeightedGraph::weight(std::size_t i, std::size_t j) const {
  const auto& w = w_[slot(i, j)];
  if (!w) {
    throw std::out_of_range("missing weight for pair (" + std::to_string(i) + ", " +
                            std::to_string(j) + ")");
  }
  return *w;
}

bool WeightedGraph::is_complete() const {
  for (std::size_t j = 2; j <= n_; ++j) {
    for (std::size_t i = 1; i < j; ++i) {
      if (!has_weight(i, j)) return false;
    }
  }
  return true;
}

Cost WeightedGraph::max_abs_weight() const {
  Cost best(0);
  for (const auto& w : w_) {
    if (w && Cost(w->magnitude()) > best) best = Cost(w->magnitude());
  }
  return best;
}

}  // namespace tedhard
