#include "tedhard/tree.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <utility>

namespace tedhard {

LabeledTree LabeledTree::single(Label label) {
  LabeledTree t;
  t.add_root(label);
  return t;
}

LabeledTree LabeledTree::path(std::span<const Label> labels) {
  LabeledTree t;
  NodeId last = kNoNode;
  for (Label l : labels) last = (last == kNoNode) ? t.add_root(l) : t.add_child(last, l);
  return t;
}

NodeId LabeledTree::add_root(Label label) {
  if (!empty()) throw std::logic_error("tree already has a root");
  labels_.push_back(label);
  parents_.push_back(kNoNode);
  children_.emplace_back();
  return 0;
}

NodeId LabeledTree::add_child(NodeId parent, Label label) {
  if (parent >= size()) throw std::out_of_range("add_child: bad parent");
  const auto id = static_cast<NodeId>(size());
  labels_.push_back(label);
  parents_.push_back(parent);
  children_.emplace_back();
  children_[parent].push_back(id);
  return id;
}

NodeId LabeledTree::graft(NodeId parent, const LabeledTree& sub) {
  if (sub.empty()) return kNoNode;
  std::vector<NodeId> mapped(sub.size(), kNoNode);
  for (NodeId v : preorder(sub)) {
    const NodeId p = sub.parent(v);
    mapped[v] = add_child(p == kNoNode ? parent : mapped[p], sub.label(v));
  }
  return mapped[sub.root()];
}

Label LabeledTree::label_bound() const {
  Label bound = 0;
  for (Label l : labels_) bound = std::max(bound, l + 1);
  return bound;
}

LabeledTree make_tree(Label root_label, std::span<const LabeledTree> children) {
  LabeledTree t = LabeledTree::single(root_label);
  for (const auto& c : children) t.graft(t.root(), c);
  return t;
}

ParseError::ParseError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

namespace {

void skip_ws(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

}  // namespace

LabeledTree parse_tree(std::string_view text) {
  std::size_t pos = 0;
  skip_ws(text, pos);
  if (pos == text.size()) throw ParseError("empty input", pos);

  LabeledTree tree;
  std::vector<NodeId> open;
  bool done = false;
  while (true) {
    skip_ws(text, pos);
    if (pos == text.size()) {
      if (done) break;
      throw ParseError("unexpected end of input", pos);
    }
    if (done) throw ParseError("trailing characters", pos);
    const char ch = text[pos];
    if (ch == '(') {
      ++pos;
      skip_ws(text, pos);
      if (pos < text.size() && text[pos] == ')' && tree.empty() && open.empty()) {
        ++pos;
        done = true;
        continue;
      }
      const std::size_t num_start = pos;
      Label label = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), label);
      if (ec != std::errc() || ptr == text.data() + pos) {
        throw ParseError("expected non-negative integer label", num_start);
      }
      pos = static_cast<std::size_t>(ptr - text.data());
      if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
          text[pos] != '(' && text[pos] != ')') {
        throw ParseError("malformed label", num_start);
      }
      open.push_back(open.empty() ? tree.add_root(label) : tree.add_child(open.back(), label));
    } else if (ch == ')') {
      if (open.empty()) throw ParseError("unbalanced ')'", pos);
      ++pos;
      open.pop_back();
      if (open.empty()) done = true;
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "'", pos);
    }
  }
  return tree;
}

std::string serialize_tree(const LabeledTree& tree) {
  if (tree.empty()) return "()";
  std::string out;
  // (node, next child index)
  std::vector<std::pair<NodeId, std::size_t>> stack{{tree.root(), 0}};
  out += '(' + std::to_string(tree.label(tree.root()));
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    auto kids = tree.children(v);
    if (next < kids.size()) {
      const NodeId c = kids[next++];
      out += " (" + std::to_string(tree.label(c));
      stack.emplace_back(c, 0);
    } else {
      out += ')';
      stack.pop_back();
    }
  }
  return out;
}

std::vector<NodeId> preorder(const LabeledTree& tree) {
  std::vector<NodeId> order;
  if (tree.empty()) return order;
  order.reserve(tree.size());
  std::vector<NodeId> stack{tree.root()};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    auto kids = tree.children(v);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return order;
}

std::vector<std::size_t> postorder_index(const LabeledTree& tree) {
  std::vector<std::size_t> index(tree.size());
  if (tree.empty()) return index;
  std::size_t counter = 0;
  std::vector<std::pair<NodeId, std::size_t>> stack{{tree.root(), 0}};
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    auto kids = tree.children(v);
    if (next < kids.size()) {
      const NodeId c = kids[next++];
      stack.emplace_back(c, 0);
    } else {
      index[v] = counter++;
      stack.pop_back();
    }
  }
  return index;
}

TreeOrder::TreeOrder(const LabeledTree& tree) : pre_(tree.size()), post_(postorder_index(tree)) {
  const auto order = preorder(tree);
  for (std::size_t i = 0; i < order.size(); ++i) pre_[order[i]] = i;
}

}  // namespace tedhard
