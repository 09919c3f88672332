#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tedhard/cost_model.hpp"
#include "tedhard/graph.hpp"
#include "tedhard/reduce_apsp.hpp"
#include "tedhard/reduce_clique.hpp"
#include "tedhard/tree.hpp"

namespace tedhard {

/// Malformed instance or graph text; line() is 1-based.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

using KeyFields = std::vector<std::pair<std::string, std::string>>;

/// A TED instance as stored on disk. A COSTS DELETE block marks the
/// standard formulation.
struct InstanceFile {
  LabeledTree f;
  LabeledTree g;
  CostModel cm;
  KeyFields key;  // empty when there is no KEY line
};

/// Canonical text: header, ALPHABET, TREE1, TREE2, COSTS MATCH with finite
/// entries in (a, b) order, COSTS DELETE when the model has deletion costs,
/// then KEY.
std::string emit_instance(const InstanceFile& inst);
InstanceFile parse_instance(std::string_view text);

/// "GRAPH v1", n, then "i j w" for every pair i < j.
std::string emit_graph(const WeightedGraph& g);
/// Requires every pair exactly once (either order); throws FormatError.
WeightedGraph parse_graph(std::string_view text);

KeyFields key_fields(const TriangleKey& key);
KeyFields key_fields(const CliqueKey& key);
bool is_clique_key(const KeyFields& key);
/// Throw FormatError (line 0) on missing or malformed fields.
TriangleKey triangle_key(const KeyFields& key);
CliqueKey clique_key(const KeyFields& key);

}  // namespace tedhard
