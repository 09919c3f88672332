#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "tedhard/solvers.hpp"

namespace tedhard {

bool validate_matching(const LabeledTree& f, const LabeledTree& g, const Matching& m) {
  for (const auto& [v, w] : m.pairs) {
    if (v >= f.size()) throw std::out_of_range("dangling F node " + std::to_string(v));
    if (w >= g.size()) throw std::out_of_range("dangling G node " + std::to_string(w));
  }
  std::set<NodeId> seen_f, seen_g;
  for (const auto& [v, w] : m.pairs) {
    if (!seen_f.insert(v).second || !seen_g.insert(w).second) return false;
  }
  const TreeOrder of(f), og(g);
  for (std::size_t a = 0; a < m.pairs.size(); ++a) {
    for (std::size_t b = 0; b < m.pairs.size(); ++b) {
      if (a == b) continue;
      const auto [v1, w1] = m.pairs[a];
      const auto [v2, w2] = m.pairs[b];
      if (of.is_ancestor(v1, v2) != og.is_ancestor(w1, w2)) return false;
      if (of.is_left_of(v1, v2) != og.is_left_of(w1, w2)) return false;
    }
  }
  return true;
}

Cost matching_cost(const LabeledTree& f, const LabeledTree& g, const CostModel& cm,
                   const Matching& m) {
  Cost total(0);
  for (const auto& [v, w] : m.pairs) total += cm.match(f.label(v), g.label(w));
  return total;
}

namespace {

class BruteForce {
 public:
  BruteForce(const LabeledTree& f, const LabeledTree& g, const CostModel& cm, bool collect)
      : f_(f), g_(g), of_(f), og_(g), fpre_(preorder(f)), gpre_(preorder(g)), collect_(collect) {
    cost_.resize(fpre_.size());
    suffix_bound_.assign(fpre_.size() + 1, Cost(0));
    for (std::size_t i = 0; i < fpre_.size(); ++i) {
      Cost best_row(0);
      for (std::size_t j = 0; j < gpre_.size(); ++j) {
        cost_[i].push_back(cm.match(f.label(fpre_[i]), g.label(gpre_[j])));
        best_row = min(best_row, cost_[i].back());
      }
      row_min_.push_back(best_row);
    }
    for (std::size_t i = fpre_.size(); i-- > 0;) suffix_bound_[i] = suffix_bound_[i + 1] + row_min_[i];
  }

  BruteForceResult run() {
    BruteForceResult out;
    // The empty matching (value 0) is always feasible.
    best_ = Cost(0);
    search(0, 0, Cost(0));
    out.best.value = best_;
    out.best.matching = best_matching_;
    out.all_optimal = std::move(all_);
    return out;
  }

 private:
  void search(std::size_t pos, std::size_t next_g, const Cost& partial) {
    const Cost optimistic = partial + suffix_bound_[pos];
    if (collect_ ? optimistic > best_ : optimistic >= best_) return;
    if (pos == fpre_.size()) {
      record(partial);
      return;
    }
    // Pairs ordered by F preorder are also ordered by G preorder.
    for (std::size_t j = next_g; j < gpre_.size(); ++j) {
      if (cost_[pos][j].is_infinite() || !consistent(fpre_[pos], gpre_[j])) continue;
      current_.emplace_back(fpre_[pos], gpre_[j]);
      search(pos + 1, j + 1, partial + cost_[pos][j]);
      current_.pop_back();
    }
    search(pos + 1, next_g, partial);
  }

  bool consistent(NodeId v, NodeId w) const {
    for (const auto& [pv, pw] : current_) {
      if (of_.is_ancestor(pv, v) != og_.is_ancestor(pw, w)) return false;
    }
    return true;
  }

  void record(const Cost& value) {
    if (value < best_) {
      best_ = value;
      best_matching_.pairs = current_;
      all_.clear();
      if (collect_) all_.push_back(best_matching_);
    } else if (collect_ && value == best_) {
      all_.push_back(Matching{current_});
    }
  }

  const LabeledTree& f_;
  const LabeledTree& g_;
  TreeOrder of_, og_;
  std::vector<NodeId> fpre_, gpre_;
  bool collect_;
  std::vector<std::vector<Cost>> cost_;
  std::vector<Cost> row_min_;
  std::vector<Cost> suffix_bound_;
  std::vector<std::pair<NodeId, NodeId>> current_;
  Cost best_;
  Matching best_matching_;
  std::vector<Matching> all_;
};

}  // namespace

BruteForceResult brute_force_matching_all(const LabeledTree& f, const LabeledTree& g,
                                          const CostModel& cm, BruteForceOptions opts) {
  if (f.size() > opts.max_nodes || g.size() > opts.max_nodes) {
    throw std::invalid_argument("brute force size guard exceeded (" + std::to_string(f.size()) +
                                ", " + std::to_string(g.size()) + " > " +
                                std::to_string(opts.max_nodes) + ")");
  }
  return BruteForce(f, g, cm, opts.collect_all_optimal).run();
}

MatchingResult brute_force_matching(const LabeledTree& f, const LabeledTree& g,
                                    const CostModel& cm, BruteForceOptions opts) {
  opts.collect_all_optimal = false;
  return brute_force_matching_all(f, g, cm, opts).best;
}

}  // namespace tedhard
