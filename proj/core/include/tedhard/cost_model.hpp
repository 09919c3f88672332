#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tedhard/cost.hpp"
#include "tedhard/tree.hpp"

namespace tedhard {

enum class Formulation { kMatching, kStandard };

/// Label-pair costs over a dense alphabet [0, alphabet_size).
///
/// In the matching formulation unmatched nodes are free and a matched pair
/// (a, b) pays match(a, b). In the standard formulation every label also has
/// a deletion (= insertion) cost and match(a, b) is the relabel cost. Pairs
/// that were never set are forbidden (+inf).
class CostModel {
 public:
  CostModel() = default;
  explicit CostModel(Label alphabet_size, Formulation f = Formulation::kMatching);

  Label alphabet_size() const { return alphabet_size_; }
  Formulation formulation() const { return formulation_; }

  void set_match(Label a, Label b, Cost c);
  Cost match(Label a, Label b) const;
  /// Finite and explicitly stored entries, ordered by (a, b).
  const std::map<std::pair<Label, Label>, Cost>& match_entries() const { return match_; }

  void set_delete(Label a, Cost c);
  /// Deletion cost of `a`; throws if the model has none for it.
  const Cost& delete_cost(Label a) const;
  bool has_delete(Label a) const;

  /// Grows the alphabet (never shrinks).
  void reserve_alphabet(Label size);

  friend bool operator==(const CostModel&, const CostModel&) = default;

 private:
  void check_label(Label a) const;

  Label alphabet_size_ = 0;
  Formulation formulation_ = Formulation::kMatching;
  std::map<std::pair<Label, Label>, Cost> match_;
  std::vector<std::optional<Cost>> delete_;
};

/// match'(a, b) = match(a, b) - del(a) - del(b) for finite pairs; forbidden
/// pairs stay forbidden. Throws if some label lacks a deletion cost.
CostModel to_matching_formulation(const CostModel& standard);

/// Inverse direction: sum of deletion costs over both trees plus the
/// optimal matching value under the converted model.
Cost standard_ted_value(const LabeledTree& f, const LabeledTree& g, const CostModel& standard,
                        const Cost& matching_value);

}  // namespace tedhard
