#pragma once

// Scalar policies used by the dynamic programs. Exact Cost is always
// correct; the fixed-width policies are selected only after a magnitude
// bound proves that no finite intermediate value can overflow.

#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

#include "tedhard/cost.hpp"
#include "tedhard/cost_model.hpp"
#include "tedhard/tree.hpp"

namespace tedhard::detail {

template <class T>
struct Num;

template <class I>
struct FixedNum {
  using value_type = I;
  static constexpr I inf() { return std::numeric_limits<I>::max(); }
  static constexpr bool is_inf(I v) { return v == inf(); }
  static constexpr I zero() { return 0; }
  static constexpr I add(I a, I b) { return (a == inf() || b == inf()) ? inf() : a + b; }
  static Cost to_cost(I v) {
    if (v == inf()) return Cost::infinity();
    if constexpr (sizeof(I) == 16) {
      return Cost::from_int128(v);
    } else {
      return Cost(static_cast<long>(v));
    }
  }
  static I from_cost(const Cost& c) {
    if (c.is_infinite()) return inf();
    if constexpr (sizeof(I) == 16) {
      return c.to_int128();
    } else {
      return c.to_int64();
    }
  }
};

template <>
struct Num<std::int64_t> : FixedNum<std::int64_t> {};
template <>
struct Num<__int128> : FixedNum<__int128> {};

template <>
struct Num<Cost> {
  using value_type = Cost;
  static Cost inf() { return Cost::infinity(); }
  static bool is_inf(const Cost& v) { return v.is_infinite(); }
  static Cost zero() { return Cost(0); }
  static Cost add(const Cost& a, const Cost& b) { return a + b; }
  static Cost to_cost(const Cost& v) { return v; }
  static Cost from_cost(const Cost& c) { return c; }
};

enum class ScalarKind { kInt64, kInt128, kExact };

/// Chooses the narrowest scalar for which every DP value stays in range.
/// `bound` must dominate the absolute value of any partial sum.
ScalarKind choose_scalar(const mpz_class& bound);

/// Sum over nodes of `tree` of the largest finite |cost| that node's label
/// can pay against any label in `other_labels` (row- or column-wise).
mpz_class matching_magnitude_bound(const LabeledTree& f, const LabeledTree& g,
                                   const CostModel& cm);
/// Same bound from the node label multisets of the two sides.
mpz_class matching_magnitude_bound(const std::vector<Label>& left,
                                   const std::vector<Label>& right, const CostModel& cm);

/// Label-pair cost lookup restricted to the labels occurring in two trees.
template <class T>
class PairTable {
 public:
  PairTable(const CostModel& cm, const std::vector<Label>& left_labels,
            const std::vector<Label>& right_labels)
      : left_(index_labels(left_labels)), right_(index_labels(right_labels)),
        cols_(right_.distinct.size()) {
    const std::size_t cells = left_.distinct.size() * cols_;
    dense_ = cells <= (std::size_t{1} << 24);
    if (dense_) table_.assign(cells, Num<T>::inf());
    for (const auto& [key, c] : cm.match_entries()) {
      auto li = left_.lookup.find(key.first);
      auto ri = right_.lookup.find(key.second);
      if (li == left_.lookup.end() || ri == right_.lookup.end()) continue;
      const std::size_t k = li->second * cols_ + ri->second;
      if (dense_) {
        table_[k] = Num<T>::from_cost(c);
      } else {
        sparse_.emplace(k, Num<T>::from_cost(c));
      }
    }
  }

  /// Dense index of a left/right label (must occur in the constructor input).
  std::size_t left_index(Label a) const { return left_.lookup.at(a); }
  std::size_t right_index(Label b) const { return right_.lookup.at(b); }

  const T& at(std::size_t li, std::size_t ri) const {
    const std::size_t k = li * cols_ + ri;
    if (dense_) return table_[k];
    auto it = sparse_.find(k);
    return it == sparse_.end() ? inf_ : it->second;
  }

 private:
  struct Index {
    std::vector<Label> distinct;
    std::unordered_map<Label, std::size_t> lookup;
  };
  static Index index_labels(const std::vector<Label>& labels) {
    Index idx;
    for (Label l : labels) {
      if (idx.lookup.emplace(l, idx.distinct.size()).second) idx.distinct.push_back(l);
    }
    return idx;
  }

  Index left_;
  Index right_;
  std::size_t cols_;
  bool dense_ = true;
  std::vector<T> table_;
  std::unordered_map<std::size_t, T> sparse_;
  T inf_ = Num<T>::inf();
};

}  // namespace tedhard::detail
