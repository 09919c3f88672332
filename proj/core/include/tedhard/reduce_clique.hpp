#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tedhard/cost.hpp"
#include "tedhard/cost_model.hpp"
#include "tedhard/graph.hpp"
#include "tedhard/tree.hpp"

namespace tedhard {

/// All (k/3)-subsets of the node set, sorted ascending inside and listed in
/// lexicographic order. subset(i) is 1-based.
struct CliqueEnumeration {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::vector<std::size_t>> subsets;

  std::size_t N() const { return subsets.size(); }
  std::size_t part() const { return k / 3; }
  const std::vector<std::size_t>& subset(std::size_t i) const { return subsets.at(i - 1); }
};

/// Throws std::invalid_argument unless 3 | k, k >= 3 and n >= k / 3.
CliqueEnumeration enumerate_subcliques(const WeightedGraph& g, std::size_t k);

/// w(u, v) + Lambda for u != v, 0 on the diagonal.
struct ShiftedWeights {
  std::size_t n = 0;
  Cost lambda;
  std::vector<Cost> w;  // n x n, row-major, 0-based

  const Cost& at(std::size_t u, std::size_t v) const { return w.at((u - 1) * n + (v - 1)); }
};

/// Lambda = k^2 (max|w| + 1).
ShiftedWeights shift_weights(const WeightedGraph& g, std::size_t k);

/// W(i, j): shifted weight of the edges inside Q(i) plus all pairs between
/// Q(i) and Q(j). Throws std::out_of_range for bad indices.
Cost pair_weight(const CliqueEnumeration& ce, const ShiftedWeights& sw, std::size_t i,
                 std::size_t j);

/// Two trees and the cost model that prices pairs between them.
struct GadgetPair {
  LabeledTree left;
  LabeledTree right;
  CostModel cm;
};

/// Optimum -x. Left: path of digit segments, most significant on top.
/// Right: d segments of base - 1 nodes. Throws unless 0 <= x < base^d.
GadgetPair decrease_gadget(const Cost& x, std::size_t d, std::size_t base);

/// Optimum -c (n - |u - v|). Throws unless 1 <= u, v <= n and c >= 0.
GadgetPair equality_gadget(std::size_t u, std::size_t v, const Cost& c, std::size_t n);

/// Smallest d with n^d > M^6 + M^3 N.
std::size_t digit_count(const Cost& M, std::size_t n, std::size_t N);

/// Constants of one connection gadget family over weights w.
struct ConnectionConstants {
  Cost M;   // target offset: optimum is -M - W(i, j)
  Cost M1;  // equality reward, (k/3 + 1) times the sum of w over ordered pairs
  Cost M2;  // child reward, M1 n (k/3) + M1
  std::size_t n = 0;
  std::size_t part = 0;  // k / 3
  /// M - M2 (k/3) - M1 n (k/3); the gadget is exact when this is >= 0.
  Cost slack() const;
};

/// C(i, j, M) for every i (left trees) and j (right trees) over shifted
/// weights, sharing one cost model. Throws std::invalid_argument when the
/// slack is negative and `enforce` is set.
struct ConnectionGadgets {
  std::vector<LabeledTree> left;   // left[i - 1]
  std::vector<LabeledTree> right;  // right[j - 1]
  CostModel cm;
  ConnectionConstants constants;
  std::size_t digits = 0;
};
ConnectionGadgets connection_gadgets(const CliqueEnumeration& ce, const ShiftedWeights& sw,
                                     const Cost& M, bool enforce = true);

/// Exponent of the largest power of n dividing value (value >= 1, n >= 2).
std::size_t largest_power_exponent(std::size_t value, std::size_t n);

/// k/3 segments I_0..I_{k/3-1} of n - 1 nodes, I_0 at the root. A node of
/// I_m matches only a spine node labelled spine[m], at cost -M^7 n^m.
struct IGadget {
  LabeledTree path;
  std::vector<Label> segment;  // label of I_m
  std::vector<Label> spine;
  CostModel cm;
};
IGadget build_i_gadget(std::size_t n, std::size_t k, const Cost& M);

enum class MPolicy {
  kAuto,       // least power of two >= 8 W n^3 k^3, W over unordered pairs
  kEmpirical,  // smallest M for which every connection gadget is exact
  kFamily,     // n^e with e fixed by (c, k); keeps the alphabet independent of n
  kExplicit,
};

struct MChoice {
  MPolicy policy = MPolicy::kAuto;
  Cost value;  // used by kExplicit
};

/// kPublished follows the published attachment order and micro structures.
/// kCorrected puts B_z right of b'_z and D_z left of d'_z, and drops the
/// A_1 ~ C_j (j >= 2) interaction; without both changes extra micro pairs
/// beat the intended optimum.
enum class CliqueLayout { kCorrected, kPublished };

struct CliqueParams {
  CliqueLayout layout = CliqueLayout::kCorrected;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t N = 0;
  std::size_t d = 0;
  Cost M;
  Cost lambda;
};

/// Resolves the policy to a concrete M.
Cost choose_M_clique(const WeightedGraph& g, std::size_t k, const MChoice& choice);

/// First violated precondition of the four connection families (or of
/// w' = M - wShift >= 0), if any.
std::optional<std::string> clique_precondition_violation(const CliqueEnumeration& ce,
                                                         const ShiftedWeights& sw,
                                                         const Cost& M);

/// Micro structures indexed from 0 (entry i - 1 holds index i) over one
/// shared cost model.
struct MicroStructures {
  std::vector<LabeledTree> a_prime, d, b, c_prime, a, c;
  CostModel cm;
  std::vector<std::string> label_names;
};
MicroStructures build_micro_structures(const CliqueEnumeration& ce, const ShiftedWeights& sw,
                                       const CliqueParams& params);

struct CliqueKey {
  Cost M;
  std::size_t N = 0;
  std::size_t k = 0;
  Cost lambda;
  std::size_t n = 0;
};

struct CliqueInstance {
  LabeledTree f;
  LabeledTree g;
  CostModel cm;
  CliqueKey key;
  std::size_t digits = 0;
  /// One name per label, "<group>.<name>"; finite costs never cross groups.
  std::vector<std::string> label_names;
};

struct CliqueBuildOptions {
  MChoice m;
  CliqueLayout layout = CliqueLayout::kCorrected;
  /// Reject an M whose connection gadgets are not exact.
  bool enforce_preconditions = true;
};

/// Throws std::invalid_argument for an incomplete graph, k not divisible
/// by 3, n < max(k, 2), or (when enforced) an insufficient M.
CliqueInstance build_clique_instance(const WeightedGraph& g, std::size_t k,
                                     const CliqueBuildOptions& opts = {});

/// -2M^8 - 2M^7 (N - 1) - 2M^6 - M^5 - 2M^3 N + M^2.
Cost clique_value_offset(const CliqueKey& key);

struct CliqueExtraction {
  Cost value;
  Cost max_shifted;
  std::optional<std::string> diagnostic;
};
CliqueExtraction extract_max_clique_weight(const CliqueKey& key, const Cost& matching_value);

/// Max over k-subsets of the summed edge weights. Throws for n < k or k < 2.
Cost brute_max_weight_k_clique(const WeightedGraph& g, std::size_t k);

}  // namespace tedhard
