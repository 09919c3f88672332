#include "tedhard/cost_model.hpp"

#include <stdexcept>
#include <string>

namespace tedhard {

CostModel::CostModel(Label alphabet_size, Formulation f)
    : alphabet_size_(alphabet_size), formulation_(f) {
  if (f == Formulation::kStandard) delete_.resize(alphabet_size);
}

void CostModel::check_label(Label a) const {
  if (a >= alphabet_size_) {
    throw std::out_of_range("label " + std::to_string(a) + " outside alphabet of size " +
                            std::to_string(alphabet_size_));
  }
}

void CostModel::set_match(Label a, Label b, Cost c) {
  check_label(a);
  check_label(b);
  if (c.is_infinite()) {
    match_.erase({a, b});
  } else {
    match_[{a, b}] = std::move(c);
  }
}

Cost CostModel::match(Label a, Label b) const {
  auto it = match_.find({a, b});
  return it == match_.end() ? Cost::infinity() : it->second;
}

void CostModel::set_delete(Label a, Cost c) {
  check_label(a);
  if (formulation_ != Formulation::kStandard) {
    throw std::logic_error("deletion costs exist only in the standard formulation");
  }
  delete_[a] = std::move(c);
}

const Cost& CostModel::delete_cost(Label a) const {
  check_label(a);
  if (a >= delete_.size() || !delete_[a]) {
    throw std::invalid_argument("missing deletion cost for label " + std::to_string(a));
  }
  return *delete_[a];
}

bool CostModel::has_delete(Label a) const { return a < delete_.size() && delete_[a].has_value(); }

void CostModel::reserve_alphabet(Label size) {
  if (size <= alphabet_size_) return;
  alphabet_size_ = size;
  if (formulation_ == Formulation::kStandard) delete_.resize(size);
}

CostModel to_matching_formulation(const CostModel& standard) {
  if (standard.formulation() != Formulation::kStandard) {
    throw std::invalid_argument("expected a standard-formulation cost model");
  }
  for (Label a = 0; a < standard.alphabet_size(); ++a) (void)standard.delete_cost(a);
  CostModel out(standard.alphabet_size(), Formulation::kMatching);
  for (const auto& [key, c] : standard.match_entries()) {
    out.set_match(key.first, key.second,
                  c - standard.delete_cost(key.first) - standard.delete_cost(key.second));
  }
  return out;
}

Cost standard_ted_value(const LabeledTree& f, const LabeledTree& g, const CostModel& standard,
                        const Cost& matching_value) {
  if (matching_value.is_infinite()) return Cost::infinity();
  Cost total = matching_value;
  for (NodeId v = 0; v < f.size(); ++v) total += standard.delete_cost(f.label(v));
  for (NodeId v = 0; v < g.size(); ++v) total += standard.delete_cost(g.label(v));
  return total;
}

}  // namespace tedhard
