#include "tedhard/reduce_clique.hpp"

#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

namespace tedhard {
namespace {

Cost from_size(std::size_t v) { return Cost(mpz_class(std::to_string(v))); }

Cost power(std::size_t base, std::size_t e) { return pow(from_size(base), e); }

void for_each_subset(std::size_t n, std::size_t r, const auto& fn) {
  std::vector<std::size_t> cur(r);
  for (std::size_t x = 0; x < r; ++x) cur[x] = x + 1;
  if (r > n) return;
  while (true) {
    fn(cur);
    std::size_t x = r;
    while (x > 0 && cur[x - 1] == n - r + x) --x;
    if (x == 0) return;
    ++cur[x - 1];
    for (std::size_t y = x; y < r; ++y) cur[y] = cur[y - 1] + 1;
  }
}

// Collects label names and finite costs, then emits one CostModel.
class Alphabet {
 public:
  Label add(std::string name) {
    names_.push_back(std::move(name));
    return static_cast<Label>(names_.size() - 1);
  }
  void cost(Label a, Label b, Cost c) { entries_.emplace_back(a, b, std::move(c)); }
  void symmetric(Label a, Label b, const Cost& c) {
    cost(a, b, c);
    if (a != b) cost(b, a, c);
  }
  CostModel model() const {
    CostModel cm(static_cast<Label>(names_.size()));
    for (const auto& [a, b, c] : entries_) cm.set_match(a, b, c);
    return cm;
  }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::vector<std::tuple<Label, Label, Cost>> entries_;
};

LabeledTree path_of(const std::vector<Label>& labels) { return LabeledTree::path(labels); }

LabeledTree node_with(Label root, std::vector<LabeledTree> children) {
  return make_tree(root, children);
}

struct DecreaseType {
  std::size_t base = 0;
  std::vector<Label> L, R;  // per digit

  DecreaseType() = default;
  DecreaseType(Alphabet& a, const std::string& group, std::size_t d, std::size_t b) : base(b) {
    for (std::size_t i = 0; i < d; ++i) {
      L.push_back(a.add(group + ".L" + std::to_string(i)));
      R.push_back(a.add(group + ".R" + std::to_string(i)));
      a.symmetric(L.back(), R.back(), -power(b, i));
    }
  }

  LabeledTree left(const Cost& x) const {
    if (x < Cost(0) || x >= power(base, L.size())) {
      throw std::invalid_argument("decrease gadget value " + x.to_string() + " outside [0, " +
                                  power(base, L.size()).to_string() + ")");
    }
    std::vector<mpz_class> digit(L.size());
    mpz_class rest = x.value();
    const mpz_class b(std::to_string(base));
    for (std::size_t i = 0; i < L.size(); ++i) {
      digit[i] = rest % b;
      rest /= b;
    }
    std::vector<Label> labels;
    for (std::size_t i = L.size(); i-- > 0;) {
      for (unsigned long c = 0; c < digit[i].get_ui(); ++c) labels.push_back(L[i]);
    }
    return path_of(labels);
  }

  LabeledTree right() const {
    std::vector<Label> labels;
    for (std::size_t i = R.size(); i-- > 0;) labels.insert(labels.end(), base - 1, R[i]);
    return path_of(labels);
  }
};

struct EqualityType {
  std::size_t n = 0;
  Label first = 0, second = 0;

  EqualityType() = default;
  EqualityType(Alphabet& a, const std::string& group, std::size_t n_, const Cost& c) : n(n_) {
    first = a.add(group + ".E1");
    second = a.add(group + ".E2");
    a.cost(first, first, -c);
    a.cost(second, second, -c);
  }

  LabeledTree tree(std::size_t u) const {
    if (u < 1 || u > n) throw std::invalid_argument("equality gadget index out of range");
    std::vector<Label> labels(u, first);
    labels.insert(labels.end(), n - u, second);
    return path_of(labels);
  }
};

}  // namespace

CliqueEnumeration enumerate_subcliques(const WeightedGraph& g, std::size_t k) {
  if (k < 3 || k % 3 != 0) {
    throw std::invalid_argument("k must be a positive multiple of 3, got " + std::to_string(k));
  }
  if (g.size() < k / 3) throw std::invalid_argument("graph has fewer than k/3 nodes");
  CliqueEnumeration ce;
  ce.n = g.size();
  ce.k = k;
  for_each_subset(ce.n, k / 3, [&](const std::vector<std::size_t>& s) { ce.subsets.push_back(s); });
  return ce;
}

ShiftedWeights shift_weights(const WeightedGraph& g, std::size_t k) {
  ShiftedWeights sw;
  sw.n = g.size();
  sw.lambda = from_size(k * k) * (g.max_abs_weight() + Cost(1));
  sw.w.assign(sw.n * sw.n, Cost(0));
  for (std::size_t u = 1; u <= sw.n; ++u) {
    for (std::size_t v = 1; v <= sw.n; ++v) {
      if (u != v) sw.w[(u - 1) * sw.n + (v - 1)] = g.weight(u, v) + sw.lambda;
    }
  }
  return sw;
}

namespace {

// W over an arbitrary weight function given as an n x n row-major table.
Cost pair_weight_over(const std::vector<Cost>& w, std::size_t n,
                      const std::vector<std::size_t>& p, const std::vector<std::size_t>& q) {
  Cost total(0);
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = x + 1; y < p.size(); ++y) total += w[(p[x] - 1) * n + (p[y] - 1)];
    for (std::size_t t : q) total += w[(p[x] - 1) * n + (t - 1)];
  }
  return total;
}

}  // namespace

Cost pair_weight(const CliqueEnumeration& ce, const ShiftedWeights& sw, std::size_t i,
                 std::size_t j) {
  if (i < 1 || i > ce.N() || j < 1 || j > ce.N()) {
    throw std::out_of_range("pair_weight index out of range");
  }
  return pair_weight_over(sw.w, sw.n, ce.subset(i), ce.subset(j));
}

GadgetPair decrease_gadget(const Cost& x, std::size_t d, std::size_t base) {
  if (base < 2) throw std::invalid_argument("decrease gadget base must be >= 2");
  Alphabet a;
  const DecreaseType type(a, "D", d, base);
  return {type.left(x), type.right(), a.model()};
}

GadgetPair equality_gadget(std::size_t u, std::size_t v, const Cost& c, std::size_t n) {
  if (c < Cost(0)) throw std::invalid_argument("equality gadget reward must be >= 0");
  Alphabet a;
  const EqualityType type(a, "E", n, c);
  return {type.tree(u), type.tree(v), a.model()};
}

std::size_t digit_count(const Cost& M, std::size_t n, std::size_t N) {
  const Cost bound = pow(M, 6) + pow(M, 3) * from_size(N);
  std::size_t d = 0;
  Cost p(1);
  while (p <= bound) {
    p *= from_size(n);
    ++d;
  }
  return d;
}

Cost ConnectionConstants::slack() const {
  return M - M2 * from_size(part) - M1 * from_size(n * part);
}

namespace {

ConnectionConstants connection_constants(const std::vector<Cost>& w, std::size_t n,
                                         std::size_t part, const Cost& M) {
  Cost all(0);
  for (const Cost& x : w) all += x;
  ConnectionConstants k;
  k.M = M;
  k.n = n;
  k.part = part;
  k.M1 = all * from_size(part + 1);
  k.M2 = k.M1 * from_size(n * part) + k.M1;
  return k;
}

// One family of connection gadgets: shared labels, one weight table.
struct ConnectionType {
  const CliqueEnumeration* ce = nullptr;
  std::vector<Cost> w;
  ConnectionConstants k;
  Label lroot = 0, rroot = 0, child = 0;
  EqualityType eq;
  DecreaseType dec;

  ConnectionType(Alphabet& a, const std::string& group, const CliqueEnumeration& ce_,
                 std::vector<Cost> w_, const Cost& M, std::size_t d)
      : ce(&ce_), w(std::move(w_)), k(connection_constants(w, ce_.n, ce_.part(), M)) {
    lroot = a.add(group + ".Lroot");
    rroot = a.add(group + ".Rroot");
    child = a.add(group + ".child");
    eq = EqualityType(a, group, ce_.n, k.M1);
    dec = DecreaseType(a, group + ".D", d, ce_.n);
    a.symmetric(lroot, rroot, -k.slack());
    a.cost(child, child, -k.M2);
  }

  const Cost& at(std::size_t u, std::size_t v) const { return w[(u - 1) * ce->n + (v - 1)]; }

  LabeledTree left(std::size_t p) const {
    const auto& u = ce->subset(p);
    std::vector<LabeledTree> kids;
    Cost inside(0);
    for (std::size_t x = 0; x < u.size(); ++x) {
      kids.push_back(node_with(child, {eq.tree(u[x]), dec.right()}));
      for (std::size_t y = x + 1; y < u.size(); ++y) inside += at(u[x], u[y]);
    }
    kids.push_back(dec.left(inside));
    return node_with(lroot, std::move(kids));
  }

  LabeledTree right(std::size_t q) const {
    const auto& v = ce->subset(q);
    std::vector<LabeledTree> kids;
    for (std::size_t t = 1; t <= ce->n; ++t) {
      Cost across(0);
      for (std::size_t y : v) across += at(t, y);
      kids.push_back(node_with(child, {eq.tree(t), dec.left(across)}));
    }
    kids.push_back(dec.right());
    return node_with(rroot, std::move(kids));
  }
};

std::vector<Cost> modified_weights(const ShiftedWeights& sw, const Cost& M) {
  std::vector<Cost> out;
  out.reserve(sw.w.size());
  for (const Cost& x : sw.w) out.push_back(M - x);
  return out;
}

// C(k/3, 2) + (k/3)^2: number of weight terms in W(i, j).
Cost term_count(std::size_t part) { return from_size(part * (part - 1) / 2 + part * part); }

struct FamilyCheck {
  std::string name;
  ConnectionConstants k;
};

std::vector<FamilyCheck> families(const CliqueEnumeration& ce, const ShiftedWeights& sw,
                                  const Cost& M) {
  const std::size_t part = ce.part();
  const Cost P = term_count(part);
  return {
      {"A'/D connection", connection_constants(sw.w, ce.n, part, M)},
      {"B/C' connection", connection_constants(sw.w, ce.n, part, M)},
      {"A/C connection", connection_constants(sw.w, ce.n, part, M * P)},
      {"A/C modified connection",
       connection_constants(modified_weights(sw, M), ce.n, part, M * M - Cost(2) * M * P)},
  };
}

bool monotone_ok(const CliqueEnumeration& ce, const ShiftedWeights& sw, const Cost& M) {
  if (clique_precondition_violation(ce, sw, M)) return false;
  const auto now = families(ce, sw, M);
  const auto next = families(ce, sw, M + Cost(1));
  for (std::size_t x = 0; x < now.size(); ++x) {
    if (next[x].k.slack() < now[x].k.slack()) return false;
  }
  return true;
}

Cost ceil_log2(const Cost& v) {
  long e = 0;
  Cost p(1);
  while (p < v) {
    p *= Cost(2);
    ++e;
  }
  return Cost(e);
}

void check_graph(const WeightedGraph& g, std::size_t k) {
  if (!g.is_complete()) throw std::invalid_argument("graph is not complete");
  if (k < 3 || k % 3 != 0) {
    throw std::invalid_argument("k must be a positive multiple of 3, got " + std::to_string(k));
  }
  if (g.size() < std::max<std::size_t>(k, 2)) {
    throw std::invalid_argument("graph needs at least max(k, 2) nodes");
  }
}

}  // namespace

ConnectionGadgets connection_gadgets(const CliqueEnumeration& ce, const ShiftedWeights& sw,
                                     const Cost& M, bool enforce) {
  Alphabet a;
  Cost all(0);
  for (const Cost& x : sw.w) all += x;
  std::size_t d = 1;
  for (Cost p = from_size(ce.n); p <= all; p *= from_size(ce.n)) ++d;
  const ConnectionType type(a, "C", ce, sw.w, M, d);
  if (enforce && type.k.slack() < Cost(0)) {
    throw std::invalid_argument("connection gadget needs M >= " + (M - type.k.slack()).to_string());
  }
  ConnectionGadgets out;
  for (std::size_t i = 1; i <= ce.N(); ++i) {
    out.left.push_back(type.left(i));
    out.right.push_back(type.right(i));
  }
  out.cm = a.model();
  out.constants = type.k;
  out.digits = d;
  return out;
}

std::size_t largest_power_exponent(std::size_t value, std::size_t n) {
  if (value == 0 || n < 2) throw std::invalid_argument("largest_power_exponent needs value, n >= 1, 2");
  std::size_t e = 0;
  while (value % n == 0) {
    value /= n;
    ++e;
  }
  return e;
}

namespace {

// Copies of I carry one label family and the spine nodes they meter carry
// another, so two copies can never match each other.
struct IType {
  std::vector<Label> copy, spine;
  std::size_t n = 0;

  IType(Alphabet& a, const std::string& group, std::size_t n_, std::size_t part, const Cost& M)
      : n(n_) {
    const Cost m7 = pow(M, 7);
    for (std::size_t m = 0; m < part; ++m) {
      copy.push_back(a.add(group + ".copy" + std::to_string(m)));
      spine.push_back(a.add(group + ".spine" + std::to_string(m)));
      a.symmetric(copy.back(), spine.back(), -(m7 * power(n, m)));
    }
  }

  LabeledTree path() const {
    std::vector<Label> labels;
    for (Label s : copy) labels.insert(labels.end(), n - 1, s);
    return path_of(labels);
  }

  Label spine_label(std::size_t remaining) const {
    return spine.at(largest_power_exponent(remaining, n));
  }
};

}  // namespace

IGadget build_i_gadget(std::size_t n, std::size_t k, const Cost& M) {
  if (n < 2 || k < 3 || k % 3 != 0) throw std::invalid_argument("I gadget needs n >= 2, 3 | k");
  Alphabet a;
  const IType type(a, "I", n, k / 3, M);
  return {type.path(), type.copy, type.spine, a.model()};
}

std::optional<std::string> clique_precondition_violation(const CliqueEnumeration& ce,
                                                         const ShiftedWeights& sw,
                                                         const Cost& M) {
  for (const Cost& x : sw.w) {
    if (x > M) return "M = " + M.to_string() + " is below a shifted weight " + x.to_string();
  }
  for (const auto& fam : families(ce, sw, M)) {
    if (fam.k.slack() < Cost(0)) {
      return "M = " + M.to_string() + " too small for the " + fam.name + " (slack " +
             fam.k.slack().to_string() + ")";
    }
  }
  return std::nullopt;
}

Cost choose_M_clique(const WeightedGraph& g, std::size_t k, const MChoice& choice) {
  check_graph(g, k);
  const std::size_t n = g.size();
  switch (choice.policy) {
    case MPolicy::kExplicit:
      return choice.value;
    case MPolicy::kAuto: {
      const ShiftedWeights sw = shift_weights(g, k);
      Cost total(0);
      for (std::size_t u = 1; u <= n; ++u) {
        for (std::size_t v = u + 1; v <= n; ++v) total += sw.at(u, v);
      }
      const Cost target = Cost(8) * total * power(n, 3) * power(k, 3);
      Cost M(1);
      while (M < target) M *= Cost(2);
      return M;
    }
    case MPolicy::kFamily: {
      std::size_t c = 1;
      while (g.max_abs_weight() + Cost(1) > power(n, c * k)) ++c;
      const Cost slack_bits = ceil_log2(Cost(4) * from_size(k * k + 1) * power(k, 3));
      const std::size_t e = c * k + 5 + static_cast<std::size_t>(slack_bits.to_int64());
      return power(n, e);
    }
    case MPolicy::kEmpirical: {
      const CliqueEnumeration ce = enumerate_subcliques(g, k);
      const ShiftedWeights sw = shift_weights(g, k);
      Cost hi(1);
      while (!monotone_ok(ce, sw, hi)) hi *= Cost(2);
      Cost lo = hi == Cost(1) ? Cost(0) : Cost(hi.value() / 2);
      // lo fails (or is 0), hi passes
      while (hi - lo > Cost(1)) {
        const Cost mid(mpz_class((lo.value() + hi.value()) / 2));
        if (monotone_ok(ce, sw, mid)) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      return hi;
    }
  }
  return choice.value;
}

namespace {

// Labels, gadget families and micro structures of one instance.
class CliqueBuilder {
 public:
  CliqueBuilder(const CliqueEnumeration& ce, const ShiftedWeights& sw, const CliqueParams& p)
      : ce_(ce), sw_(sw), p_(p), M_(p.M), published_(p.layout == CliqueLayout::kPublished) {
    const std::size_t n = ce.n;
    const std::size_t d = p.d;
    const Cost P = term_count(ce.part());
    inert_ = a_.add("inert.root");
    outer_ad_ = DecreaseType(a_, "D.AD", d, n);
    outer_bc_ = DecreaseType(a_, "D.BC", d, n);
    dx_ = DecreaseType(a_, "D.X", d, n);
    if (published_) dy_ = DecreaseType(a_, "D.Y", d, n);
    conn_.emplace_back(a_, "C.AD", ce, sw.w, M_, d);
    conn_.emplace_back(a_, "C.BC", ce, sw.w, M_, d);
    conn_.emplace_back(a_, "C.AC", ce, sw.w, M_ * P, d);
    conn_.emplace_back(a_, "C.ACm", ce, modified_weights(sw, M_), M_ * M_ - Cost(2) * M_ * P, d);
    root_a_ = a_.add("root.A");
    root_a1_ = a_.add("root.A1");
    root_c_ = a_.add("root.C");
    root_c1_ = a_.add("root.C1");
    const Cost m5 = pow(M_, 5);
    a_.cost(root_a_, root_c1_, -m5);
    if (published_) a_.cost(root_a1_, root_c_, -m5);
    a_.cost(root_a1_, root_c1_, -m5 - pair_weight(ce, sw, 1, 1));
  }

  Alphabet& alphabet() { return a_; }

  MicroStructures micro() const {
    MicroStructures m;
    const std::size_t N = ce_.N();
    const Cost m3 = pow(M_, 3);
    const Cost m6 = pow(M_, 6);
    for (std::size_t i = 1; i <= N; ++i) {
      const Cost outer = m6 + m3 * from_size(N - i) - M_;
      m.a_prime.push_back(node_with(inert_, {outer_ad_.left(outer), conn_[0].left(i)}));
      m.d.push_back(node_with(inert_, {outer_ad_.right(), conn_[0].right(i)}));
      m.b.push_back(node_with(inert_, {outer_bc_.right(), conn_[1].left(i)}));
      m.c_prime.push_back(node_with(inert_, {outer_bc_.left(outer), conn_[1].right(i)}));
      if (i == 1) {
        m.a.push_back(published_ ? node_with(root_a1_, {dy_.right()}) : LabeledTree::single(root_a1_));
        m.c.push_back(node_with(root_c1_, {dx_.right()}));
        continue;
      }
      const Cost shift = m3 * from_size(i - 1);
      m.a.push_back(node_with(
          root_a_, {node_with(inert_, {conn_[2].right(i), conn_[3].right(i - 1)}),
                    dx_.left(shift + pair_weight(ce_, sw_, 1, i))}));
      std::vector<LabeledTree> kids;
      if (published_) kids.push_back(dy_.left(shift + pair_weight(ce_, sw_, i, 1)));
      kids.push_back(node_with(inert_, {conn_[2].left(i), conn_[3].left(i - 1)}));
      m.c.push_back(node_with(root_c_, std::move(kids)));
    }
    m.cm = a_.model();
    m.label_names = a_.names();
    return m;
  }

 private:
  const CliqueEnumeration& ce_;
  const ShiftedWeights& sw_;
  CliqueParams p_;
  Cost M_;
  bool published_;
  Alphabet a_;
  Label inert_ = 0;
  DecreaseType outer_ad_, outer_bc_, dx_, dy_;
  std::vector<ConnectionType> conn_;
  Label root_a_ = 0, root_a1_ = 0, root_c_ = 0, root_c1_ = 0;
};

CliqueParams make_params(const CliqueEnumeration& ce, const ShiftedWeights& sw, const Cost& M,
                         CliqueLayout layout) {
  CliqueParams p;
  p.layout = layout;
  p.n = ce.n;
  p.k = ce.k;
  p.N = ce.N();
  p.M = M;
  p.lambda = sw.lambda;
  p.d = digit_count(M, ce.n, ce.N());
  return p;
}

}  // namespace

MicroStructures build_micro_structures(const CliqueEnumeration& ce, const ShiftedWeights& sw,
                                       const CliqueParams& params) {
  return CliqueBuilder(ce, sw, params).micro();
}

CliqueInstance build_clique_instance(const WeightedGraph& g, std::size_t k,
                                     const CliqueBuildOptions& opts) {
  check_graph(g, k);
  const CliqueEnumeration ce = enumerate_subcliques(g, k);
  const ShiftedWeights sw = shift_weights(g, k);
  const Cost M = choose_M_clique(g, k, opts.m);
  if (M < Cost(1)) throw std::invalid_argument("M must be positive");
  if (opts.enforce_preconditions) {
    if (auto why = clique_precondition_violation(ce, sw, M)) throw std::invalid_argument(*why);
  }
  const CliqueParams params = make_params(ce, sw, M, opts.layout);
  CliqueBuilder builder(ce, sw, params);
  Alphabet& a = builder.alphabet();

  const Label a0 = a.add("macro.a0"), al = a.add("macro.a"), ap = a.add("macro.a'");
  const Label bl = a.add("macro.b"), bp = a.add("macro.b'"), bend = a.add("macro.bEnd");
  const Label c0 = a.add("macro.c0"), cl = a.add("macro.c"), cp = a.add("macro.c'");
  const Label dl = a.add("macro.d"), dp = a.add("macro.d'"), dend = a.add("macro.dEnd");
  const Cost m8 = pow(M, 8);
  a.cost(bl, cp, -m8);
  a.cost(ap, dl, -m8);
  a.cost(bp, dp, -(Cost(2) * pow(M, 7)));
  a.cost(al, cl, -(Cost(2) * pow(M, 3)) + pow(M, 2));
  const IType i_f(a, "I.F", ce.n, ce.part(), M);
  const IType i_g(a, "I.G", ce.n, ce.part(), M);
  const LabeledTree f_copy = i_f.path();
  const LabeledTree g_copy = i_g.path();

  const MicroStructures micro = builder.micro();
  const std::size_t N = ce.N();

  CliqueInstance inst;
  LabeledTree& f = inst.f;
  NodeId cur = f.add_root(a0);
  for (std::size_t i = 1; i <= N; ++i) {
    const NodeId next = f.add_child(cur, al);
    f.graft(cur, micro.a[i - 1]);
    if (i >= 2) {
      const NodeId leaf = f.add_child(cur, ap);
      f.graft(leaf, micro.a_prime[i - 2]);
      f.graft(leaf, f_copy);
    }
    cur = next;
  }
  {
    const NodeId next = f.add_child(cur, bl);
    const NodeId leaf = f.add_child(cur, ap);
    f.graft(leaf, micro.a_prime[N - 1]);
    f.graft(leaf, f_copy);
    cur = next;
  }
  for (std::size_t z = 1; z <= N; ++z) {
    const NodeId next = f.add_child(cur, z < N ? i_g.spine_label(N - z) : bend);
    // B_z right of b'_z and D_z left of d'_z: a matched leaf pair then
    // separates every other B/D from its partners
    if (params.layout == CliqueLayout::kPublished) {
      f.graft(cur, micro.b[z - 1]);
      f.add_child(cur, bp);
    } else {
      f.add_child(cur, bp);
      f.graft(cur, micro.b[z - 1]);
    }
    if (z < N) cur = f.add_child(next, bl);
  }

  LabeledTree& t = inst.g;
  cur = t.add_root(c0);
  for (std::size_t j = 1; j <= N; ++j) {
    if (j >= 2) {
      const NodeId leaf = t.add_child(cur, cp);
      t.graft(leaf, g_copy);
      t.graft(leaf, micro.c_prime[j - 2]);
    }
    const NodeId next = t.add_child(cur, cl);
    t.graft(cur, micro.c[j - 1]);
    cur = next;
  }
  {
    const NodeId leaf = t.add_child(cur, cp);
    t.graft(leaf, g_copy);
    t.graft(leaf, micro.c_prime[N - 1]);
    cur = t.add_child(cur, dl);
  }
  for (std::size_t z = 1; z <= N; ++z) {
    if (params.layout == CliqueLayout::kPublished) {
      t.add_child(cur, dp);
      t.graft(cur, micro.d[z - 1]);
    } else {
      t.graft(cur, micro.d[z - 1]);
      t.add_child(cur, dp);
    }
    if (z < N) {
      const NodeId mid = t.add_child(cur, i_f.spine_label(N - z));
      cur = t.add_child(mid, dl);
    } else {
      t.add_child(cur, dend);
    }
  }

  inst.cm = a.model();
  inst.label_names = a.names();
  inst.key = CliqueKey{M, N, k, sw.lambda, ce.n};
  inst.digits = params.d;
  return inst;
}

Cost clique_value_offset(const CliqueKey& key) {
  const Cost& M = key.M;
  const Cost N = from_size(key.N);
  return -(Cost(2) * pow(M, 8)) - Cost(2) * pow(M, 7) * (N - Cost(1)) - Cost(2) * pow(M, 6) -
         pow(M, 5) - Cost(2) * pow(M, 3) * N + pow(M, 2);
}

CliqueExtraction extract_max_clique_weight(const CliqueKey& key, const Cost& matching_value) {
  CliqueExtraction out;
  out.max_shifted = clique_value_offset(key) - matching_value;
  const Cost edges = from_size(key.k * (key.k - 1) / 2);
  out.value = out.max_shifted - edges * key.lambda;
  // Lambda = k^2 (max|w| + 1), so |original| <= C(k, 2) max|w|.
  const Cost max_abs(mpz_class(key.lambda.value() / (key.k * key.k)) - 1);
  const Cost band = edges * max_abs;
  if (out.value < -band || out.value > band) {
    out.diagnostic = "extracted weight " + out.value.to_string() + " outside [-" +
                     band.to_string() + ", " + band.to_string() +
                     "]: no disjoint triple dominates; M too small or Lambda too small";
  }
  return out;
}

Cost brute_max_weight_k_clique(const WeightedGraph& g, std::size_t k) {
  if (k < 2) throw std::invalid_argument("clique size must be >= 2");
  if (g.size() < k) throw std::invalid_argument("graph has fewer than k nodes");
  std::optional<Cost> best;
  for_each_subset(g.size(), k, [&](const std::vector<std::size_t>& s) {
    Cost total(0);
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = x + 1; y < k; ++y) total += g.weight(s[x], s[y]);
    }
    if (!best || total > *best) best = total;
  });
  return *best;
}

}  // namespace tedhard
