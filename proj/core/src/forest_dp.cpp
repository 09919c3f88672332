// Keyroot/subforest dynamic program (Zhang-Shasha family) specialised to the
// matching formulation: deleting or inserting a node is free and relabelling
// v into w costs match(label v, label w), +inf when forbidden.

#include <algorithm>
#include <vector>

#include "tedhard/detail/num.hpp"
#include "tedhard/solvers.hpp"

namespace tedhard {
namespace {

struct PostorderView {
  std::vector<NodeId> node;       // postorder index -> node id
  std::vector<std::size_t> lml;   // leftmost leaf (postorder) of each subtree
  std::vector<std::size_t> keyroots;

  explicit PostorderView(const LabeledTree& t) {
    const auto index = postorder_index(t);
    node.resize(t.size());
    for (NodeId v = 0; v < t.size(); ++v) node[index[v]] = v;
    lml.resize(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto kids = t.children(node[i]);
      lml[i] = kids.empty() ? i : lml[index[kids.front()]];
    }
    std::vector<bool> seen(t.size(), false);
    for (std::size_t i = t.size(); i-- > 0;) {
      if (!seen[lml[i]]) {
        keyroots.push_back(i);
        seen[lml[i]] = true;
      }
    }
    std::reverse(keyroots.begin(), keyroots.end());
  }
};

template <class T>
class ForestDp {
  using N = detail::Num<T>;

 public:
  ForestDp(const LabeledTree& f, const LabeledTree& g, const CostModel& cm)
      : pf_(f), pg_(g), nf_(f.size()), ng_(g.size()),
        table_(cm, labels_of(f, pf_), labels_of(g, pg_)) {
    fl_.resize(nf_);
    gl_.resize(ng_);
    for (std::size_t i = 0; i < nf_; ++i) fl_[i] = table_.left_index(f.label(pf_.node[i]));
    for (std::size_t j = 0; j < ng_; ++j) gl_[j] = table_.right_index(g.label(pg_.node[j]));
    td_.assign(nf_ * ng_, N::zero());
    fd_.assign((nf_ + 1) * (ng_ + 1), N::zero());
  }

  MatchingResult solve(const SolveOptions& opts) {
    MatchingResult out;
    if (nf_ == 0 || ng_ == 0) return out;
    const std::size_t total = pf_.keyroots.size() * pg_.keyroots.size();
    std::size_t done = 0;
    for (std::size_t kf : pf_.keyroots) {
      for (std::size_t kg : pg_.keyroots) {
        forest(kf, kg, true);
        ++done;
      }
      if (opts.progress && total > 4096) opts.progress(done, total);
    }
    out.value = N::to_cost(td_[(nf_ - 1) * ng_ + (ng_ - 1)]);
    if (!opts.value_only) out.matching = backtrace();
    return out;
  }

 private:
  static std::vector<Label> labels_of(const LabeledTree& t, const PostorderView& pv) {
    std::vector<Label> out;
    out.reserve(t.size());
    for (NodeId v : pv.node) out.push_back(t.label(v));
    return out;
  }

  T& fd(std::size_t x, std::size_t y) { return fd_[x * (ng_ + 1) + y]; }
  T& td(std::size_t x, std::size_t y) { return td_[x * ng_ + y]; }

  void forest(std::size_t kf, std::size_t kg, bool write_td) {
    const std::size_t lf = pf_.lml[kf];
    const std::size_t lg = pg_.lml[kg];
    const std::size_t rows = kf - lf + 1;
    const std::size_t cols = kg - lg + 1;
    for (std::size_t y = 0; y <= cols; ++y) fd(0, y) = N::zero();
    for (std::size_t xi = 1; xi <= rows; ++xi) {
      fd(xi, 0) = N::zero();
      const std::size_t x = lf + xi - 1;
      const bool x_path = pf_.lml[x] == lf;
      for (std::size_t yi = 1; yi <= cols; ++yi) {
        const std::size_t y = lg + yi - 1;
        T best = fd(xi - 1, yi);
        if (fd(xi, yi - 1) < best) best = fd(xi, yi - 1);
        if (x_path && pg_.lml[y] == lg) {
          T cand = N::add(fd(xi - 1, yi - 1), table_.at(fl_[x], gl_[y]));
          if (cand < best) best = std::move(cand);
          if (write_td) td(x, y) = best;
        } else {
          T cand = N::add(fd(pf_.lml[x] - lf, pg_.lml[y] - lg), td(x, y));
          if (cand < best) best = std::move(cand);
        }
        fd(xi, yi) = std::move(best);
      }
    }
  }

  Matching backtrace() {
    Matching m;
    std::vector<std::pair<std::size_t, std::size_t>> pending{{nf_ - 1, ng_ - 1}};
    while (!pending.empty()) {
      const auto [kf, kg] = pending.back();
      pending.pop_back();
      forest(kf, kg, false);
      const std::size_t lf = pf_.lml[kf];
      const std::size_t lg = pg_.lml[kg];
      std::size_t xi = kf - lf + 1;
      std::size_t yi = kg - lg + 1;
      while (xi > 0 && yi > 0) {
        const std::size_t x = lf + xi - 1;
        const std::size_t y = lg + yi - 1;
        const T& cur = fd(xi, yi);
        if (cur == fd(xi - 1, yi)) {
          --xi;
        } else if (cur == fd(xi, yi - 1)) {
          --yi;
        } else if (pf_.lml[x] == lf && pg_.lml[y] == lg) {
          m.pairs.emplace_back(pf_.node[x], pg_.node[y]);
          --xi;
          --yi;
        } else {
          pending.emplace_back(x, y);
          xi = pf_.lml[x] - lf;
          yi = pg_.lml[y] - lg;
        }
      }
    }
    return m;
  }

  PostorderView pf_, pg_;
  std::size_t nf_, ng_;
  detail::PairTable<T> table_;
  std::vector<std::size_t> fl_, gl_;
  std::vector<T> td_;
  std::vector<T> fd_;
};

}  // namespace

MatchingResult optimal_matching(const LabeledTree& f, const LabeledTree& g, const CostModel& cm,
                                const SolveOptions& opts) {
  if (f.empty() || g.empty()) return {};
  switch (detail::choose_scalar(detail::matching_magnitude_bound(f, g, cm))) {
    case detail::ScalarKind::kInt64:
      return ForestDp<std::int64_t>(f, g, cm).solve(opts);
    case detail::ScalarKind::kInt128:
      return ForestDp<__int128>(f, g, cm).solve(opts);
    case detail::ScalarKind::kExact:
      break;
  }
  return ForestDp<Cost>(f, g, cm).solve(opts);
}

Cost standard_ted(const LabeledTree& f, const LabeledTree& g, const CostModel& standard) {
  const CostModel converted = to_matching_formulation(standard);
  SolveOptions opts;
  opts.value_only = true;
  return standard_ted_value(f, g, standard, optimal_matching(f, g, converted, opts).value);
}

}  // namespace tedhard
