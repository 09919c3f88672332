#include "tedhard/detail/num.hpp"

#include <unordered_set>

namespace tedhard::detail {

ScalarKind choose_scalar(const mpz_class& bound) {
  // Leave two bits of headroom on top of the sentinel.
  mpz_class safe = 4 * bound + 4;
  mpz_class lim64, lim128;
  mpz_ui_pow_ui(lim64.get_mpz_t(), 2, 62);
  mpz_ui_pow_ui(lim128.get_mpz_t(), 2, 125);
  if (safe < lim64) return ScalarKind::kInt64;
  if (safe < lim128) return ScalarKind::kInt128;
  return ScalarKind::kExact;
}

mpz_class matching_magnitude_bound(const std::vector<Label>& left,
                                   const std::vector<Label>& right, const CostModel& cm) {
  const std::unordered_set<Label> in_f(left.begin(), left.end());
  const std::unordered_set<Label> in_g(right.begin(), right.end());
  std::unordered_map<Label, mpz_class> row_max, col_max;
  for (const auto& [key, c] : cm.match_entries()) {
    if (!in_f.count(key.first) || !in_g.count(key.second)) continue;
    mpz_class m = c.magnitude();
    auto& r = row_max[key.first];
    if (m > r) r = m;
    auto& k = col_max[key.second];
    if (m > k) k = m;
  }
  // A matching pays at most one pair per node on either side.
  mpz_class sum_f = 0, sum_g = 0;
  for (Label a : left) {
    auto it = row_max.find(a);
    if (it != row_max.end()) sum_f += it->second;
  }
  for (Label b : right) {
    auto it = col_max.find(b);
    if (it != col_max.end()) sum_g += it->second;
  }
  return sum_f < sum_g ? sum_f : sum_g;
}

mpz_class matching_magnitude_bound(const LabeledTree& f, const LabeledTree& g,
                                   const CostModel& cm) {
  std::vector<Label> left, right;
  left.reserve(f.size());
  right.reserve(g.size());
  for (NodeId v = 0; v < f.size(); ++v) left.push_back(f.label(v));
  for (NodeId v = 0; v < g.size(); ++v) right.push_back(g.label(v));
  return matching_magnitude_bound(left, right, cm);
}

}  // namespace tedhard::detail
