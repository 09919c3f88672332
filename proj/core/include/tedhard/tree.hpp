#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tedhard {

using Label = std::uint32_t;
using NodeId = std::uint32_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

/// Rooted, ordered tree with integer labels. Node ids are assigned in
/// creation order; use postorder_index() for a traversal numbering. The
/// empty tree (no nodes) is valid.
class LabeledTree {
 public:
  LabeledTree() = default;

  static LabeledTree single(Label label);
  /// A downward path; labels[0] is the root.
  static LabeledTree path(std::span<const Label> labels);

  bool empty() const { return labels_.empty(); }
  std::size_t size() const { return labels_.size(); }
  NodeId root() const { return empty() ? kNoNode : 0; }

  Label label(NodeId v) const { return labels_.at(v); }
  NodeId parent(NodeId v) const { return parents_.at(v); }
  std::span<const NodeId> children(NodeId v) const { return children_.at(v); }

  /// Creates the root of an empty tree.
  NodeId add_root(Label label);
  /// Appends a new rightmost child of `parent`.
  NodeId add_child(NodeId parent, Label label);
  /// Copies `sub` as the new rightmost child subtree of `parent`; returns
  /// the id of the copied root, or kNoNode when `sub` is empty.
  NodeId graft(NodeId parent, const LabeledTree& sub);

  /// Largest label + 1, or 0 for the empty tree.
  Label label_bound() const;

  friend bool operator==(const LabeledTree&, const LabeledTree&) = default;

 private:
  std::vector<Label> labels_;
  std::vector<NodeId> parents_;
  std::vector<std::vector<NodeId>> children_;
};

/// Builds a tree whose root has the given label and the given child subtrees.
LabeledTree make_tree(Label root_label, std::span<const LabeledTree> children);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Grammar: Tree := '(' INT Tree* ')', whitespace separated; "()" is the
/// empty tree.
LabeledTree parse_tree(std::string_view text);
std::string serialize_tree(const LabeledTree& tree);

/// Left-to-right postorder numbering indexed by node id.
std::vector<std::size_t> postorder_index(const LabeledTree& tree);
/// Node ids in preorder.
std::vector<NodeId> preorder(const LabeledTree& tree);

/// Pre/post intervals answering ancestor and left-of queries in O(1).
class TreeOrder {
 public:
  explicit TreeOrder(const LabeledTree& tree);

  /// Strict ancestor.
  bool is_ancestor(NodeId a, NodeId d) const {
    return pre_[a] < pre_[d] && post_[d] < post_[a];
  }
  /// a precedes b in preorder and neither is an ancestor of the other.
  bool is_left_of(NodeId a, NodeId b) const {
    return pre_[a] < pre_[b] && post_[a] < post_[b];
  }
  std::size_t pre(NodeId v) const { return pre_[v]; }
  std::size_t post(NodeId v) const { return post_[v]; }

 private:
  std::vector<std::size_t> pre_;
  std::vector<std::size_t> post_;
};

}  // namespace tedhard
