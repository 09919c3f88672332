#include "tedhard/reduce_apsp.hpp"

#include <stdexcept>

#include "tedhard/caterpillar.hpp"

namespace tedhard {

Cost choose_M_apsp(const WeightedGraph& g) {
  Cost m(16);
  m *= Cost(static_cast<long>(g.size() + 1));
  m *= g.max_abs_weight() + Cost(1);
  return m;
}

Cost diagonal_weight(const Cost& max_abs_weight) {
  // A repeated-node triangle pays w(x, x) + 2 w(y, x) >= D - 2 max|w|, and
  // a genuine triangle is at most 3 max|w|.
  Cost d = max_abs_weight;
  d *= Cost(5);
  return d + Cost(1);
}

TriangleInstance build_negative_triangle_instance(const WeightedGraph& graph, const Cost& M) {
  const std::size_t n = graph.size();
  if (n < 1) throw std::invalid_argument("graph needs at least one node");
  if (!graph.is_complete()) throw std::invalid_argument("graph is not complete");
  if (M.is_infinite() || M <= Cost(0)) throw std::invalid_argument("M must be positive");

  const TriangleLabels L{n};
  const Cost diag = diagonal_weight(graph.max_abs_weight());
  auto w = [&](std::size_t i, std::size_t j) -> Cost {
    return i == j ? diag : graph.weight(i, j);
  };
  auto times = [](const Cost& x, std::size_t k) {
    Cost r = x;
    r *= Cost(static_cast<long>(k));
    return r;
  };
  const Cost m2 = pow(M, 2);

  Caterpillar f, g;
  f.side = CaterpillarSide::kLeft;
  g.side = CaterpillarSide::kRight;
  for (std::size_t i = 1; i <= n; ++i) {
    f.spine.push_back(L.a(i));
    f.leaves.push_back(L.a_leaf(i));
    g.spine.push_back(L.c(i));
    g.leaves.push_back(L.c_leaf(i));
  }
  for (std::size_t k = 1; k <= n + 1; ++k) {
    f.spine.push_back(L.b(k));
    f.leaves.push_back(L.b_leaf(k));
    g.spine.push_back(L.d(k));
    g.leaves.push_back(L.d_leaf(k));
  }

  TriangleInstance inst;
  inst.f = build_tree(f);
  inst.g = build_tree(g);
  inst.cm = CostModel(L.alphabet_size());
  inst.key = {M, n, graph.max_abs_weight()};
  CostModel& cm = inst.cm;
  for (std::size_t k = 1; k <= n; ++k) {
    cm.set_match(L.b_leaf(k), L.d_leaf(k), -m2 - times(M, 2 * k));
  }
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t j = 1; j <= n; ++j) {
      cm.set_match(L.b(k + 1), L.c_leaf(j), -m2 + times(M, k + j) + w(k, j));
      cm.set_match(L.a_leaf(j), L.d(k + 1), -m2 + times(M, k + j) + w(j, k));
    }
  }
  for (std::size_t i = 2; i <= n; ++i) {
    for (std::size_t j = 2; j <= n; ++j) {
      cm.set_match(L.a(i), L.c(j), -times(M, 2) + w(i, j) - w(i - 1, j - 1));
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    cm.set_match(L.a(i), L.c(1), -times(M, i + 1) + w(i, 1));
  }
  for (std::size_t j = 2; j <= n; ++j) {
    cm.set_match(L.a(1), L.c(j), -times(M, j + 1) + w(1, j));
  }
  return inst;
}

TriangleExtraction extract_min_triangle(const TriangleKey& key, const Cost& matching_value) {
  TriangleExtraction out;
  out.value = matching_value + Cost(3) * pow(key.M, 2);
  Cost band = key.max_abs_weight;
  band *= Cost(3);
  if (out.value.is_infinite() || out.value > band || out.value < -band) {
    out.diagnostic = "M too small: extracted " + out.value.to_string() + " lies outside [-" +
                     band.to_string() + ", " + band.to_string() + "]";
  }
  return out;
}

std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> triangle_from_matching(
    const TriangleInstance& inst, const Matching& m) {
  const TriangleLabels L{inst.key.n};
  const std::size_t n = L.n;
  std::optional<std::size_t> i, j, k1, k2;
  for (const auto& [v, x] : m.pairs) {
    const Label lf = inst.f.label(v);
    const Label lg = inst.g.label(x);
    if (lf >= L.b(2) && lf <= L.b(n + 1) && lg >= L.c_leaf(1) && lg <= L.c_leaf(n)) {
      k1 = lf - L.b(1);
      j = lg - L.c_leaf(1) + 1;
    }
    if (lf >= L.a_leaf(1) && lf <= L.a_leaf(n) && lg >= L.d(2) && lg <= L.d(n + 1)) {
      i = lf - L.a_leaf(1) + 1;
      k2 = lg - L.d(1);
    }
  }
  if (!i || !j || !k1 || !k2 || *k1 != *k2) return std::nullopt;
  return std::tuple{*i, *j, *k1};
}

Cost brute_min_triangle(const WeightedGraph& g) {
  const std::size_t n = g.size();
  if (n < 3) throw std::invalid_argument("need at least three nodes");
  Cost best = Cost::infinity();
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      for (std::size_t k = j + 1; k <= n; ++k) {
        best = min(best, g.weight(i, j) + g.weight(j, k) + g.weight(i, k));
      }
    }
  }
  return best;
}

bool detect_negative_triangle(const WeightedGraph& g, TriangleMethod method) {
  if (g.size() < 3) throw std::invalid_argument("need at least three nodes");
  if (method == TriangleMethod::kBruteForce) return brute_min_triangle(g) < Cost(0);
  const TriangleInstance inst = build_negative_triangle_instance(g, choose_M_apsp(g));
  SolveOptions opts;
  opts.value_only = true;
  const auto ex = extract_min_triangle(inst.key, optimal_matching(inst.f, inst.g, inst.cm, opts).value);
  if (ex.diagnostic) throw std::runtime_error(*ex.diagnostic);
  return ex.value < Cost(0);
}

}  // namespace tedhard
