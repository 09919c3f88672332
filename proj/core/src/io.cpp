#include "tedhard/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace tedhard {
namespace {

class Lines {
 public:
  explicit Lines(std::string_view text) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      lines_.push_back(line);
      start = end + 1;
    }
    while (!lines_.empty() && trim(lines_.back()).empty()) lines_.pop_back();
  }

  static std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  }

  bool done() const { return pos_ >= lines_.size(); }
  std::size_t number() const { return pos_ + 1; }
  std::string_view peek() const { return trim(lines_.at(pos_)); }
  std::string_view next() {
    if (done()) throw FormatError("unexpected end of input", pos_ + 1);
    return trim(lines_[pos_++]);
  }

 private:
  std::vector<std::string_view> lines_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

template <class T>
T parse_uint(std::string_view s, std::size_t line, const char* what) {
  T v{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw FormatError(std::string("bad ") + what + " '" + std::string(s) + "'", line);
  }
  return v;
}

Cost parse_cost(std::string_view s, std::size_t line) {
  auto c = Cost::parse(s);
  if (!c) throw FormatError("bad cost '" + std::string(s) + "'", line);
  return *c;
}

std::string_view after(std::string_view line, std::string_view keyword, std::size_t n) {
  if (line.substr(0, keyword.size()) != keyword ||
      (line.size() > keyword.size() && line[keyword.size()] != ' ')) {
    throw FormatError("expected " + std::string(keyword), n);
  }
  return Lines::trim(line.substr(keyword.size()));
}

const std::string& field(const KeyFields& key, const std::string& name) {
  for (const auto& [k, v] : key) {
    if (k == name) return v;
  }
  throw FormatError("KEY lacks " + name, 0);
}

Cost cost_field(const KeyFields& key, const std::string& name) {
  return parse_cost(field(key, name), 0);
}

std::size_t size_field(const KeyFields& key, const std::string& name) {
  return parse_uint<std::size_t>(field(key, name), 0, name.c_str());
}

}  // namespace

std::string emit_instance(const InstanceFile& inst) {
  std::ostringstream out;
  out << "TED-INSTANCE v1\n";
  out << "ALPHABET " << inst.cm.alphabet_size() << "\n";
  out << "TREE1 " << serialize_tree(inst.f) << "\n";
  out << "TREE2 " << serialize_tree(inst.g) << "\n";
  out << "COSTS MATCH\n";
  for (const auto& [pair, c] : inst.cm.match_entries()) {
    out << pair.first << ' ' << pair.second << ' ' << c << "\n";
  }
  if (inst.cm.formulation() == Formulation::kStandard) {
    out << "COSTS DELETE\n";
    for (Label a = 0; a < inst.cm.alphabet_size(); ++a) {
      if (inst.cm.has_delete(a)) out << a << ' ' << inst.cm.delete_cost(a) << "\n";
    }
  }
  if (!inst.key.empty()) {
    out << "KEY";
    for (const auto& [k, v] : inst.key) out << ' ' << k << '=' << v;
    out << "\n";
  }
  return out.str();
}

InstanceFile parse_instance(std::string_view text) {
  Lines in(text);
  InstanceFile inst;
  if (in.next() != "TED-INSTANCE v1") throw FormatError("expected header TED-INSTANCE v1", 1);
  std::size_t n = in.number();
  const auto alphabet = parse_uint<Label>(after(in.next(), "ALPHABET", n), n, "alphabet size");
  std::vector<std::pair<std::size_t, std::string_view>> trees;
  for (const char* kw : {"TREE1", "TREE2"}) {
    n = in.number();
    const std::string_view body = after(in.next(), kw, n);
    try {
      (kw[4] == '1' ? inst.f : inst.g) = parse_tree(body);
    } catch (const ParseError& e) {
      throw FormatError(e.what(), n);
    }
  }
  n = in.number();
  if (in.next() != "COSTS MATCH") throw FormatError("expected COSTS MATCH", n);
  std::vector<std::tuple<Label, Label, Cost, std::size_t>> match;
  while (!in.done() && in.peek() != "COSTS DELETE" && in.peek().substr(0, 3) != "KEY") {
    n = in.number();
    const auto parts = split(in.next());
    if (parts.empty()) continue;
    if (parts.size() != 3) throw FormatError("expected '<a> <b> <cost>'", n);
    match.emplace_back(parse_uint<Label>(parts[0], n, "label"), parse_uint<Label>(parts[1], n, "label"),
                       parse_cost(parts[2], n), n);
  }
  std::vector<std::tuple<Label, Cost, std::size_t>> del;
  bool standard = false;
  if (!in.done() && in.peek() == "COSTS DELETE") {
    in.next();
    standard = true;
    while (!in.done() && in.peek().substr(0, 3) != "KEY") {
      n = in.number();
      const auto parts = split(in.next());
      if (parts.empty()) continue;
      if (parts.size() != 2) throw FormatError("expected '<a> <cost>'", n);
      Cost c = parse_cost(parts[1], n);
      if (c.is_infinite()) throw FormatError("deletion cost must be finite", n);
      del.emplace_back(parse_uint<Label>(parts[0], n, "label"), std::move(c), n);
    }
  }
  inst.cm = CostModel(alphabet, standard ? Formulation::kStandard : Formulation::kMatching);
  std::set<std::pair<Label, Label>> seen;
  for (auto& [a, b, c, line] : match) {
    if (a >= alphabet || b >= alphabet) throw FormatError("label outside alphabet", line);
    if (!seen.insert({a, b}).second) throw FormatError("duplicate cost entry", line);
    inst.cm.set_match(a, b, c);
  }
  std::set<Label> seen_del;
  for (auto& [a, c, line] : del) {
    if (a >= alphabet) throw FormatError("label outside alphabet", line);
    if (!seen_del.insert(a).second) throw FormatError("duplicate deletion cost", line);
    inst.cm.set_delete(a, c);
  }
  if (!in.done()) {
    n = in.number();
    const std::string_view body = after(in.next(), "KEY", n);
    for (std::string_view part : split(body)) {
      const std::size_t eq = part.find('=');
      if (eq == std::string_view::npos || eq == 0) throw FormatError("KEY fields are name=value", n);
      inst.key.emplace_back(std::string(part.substr(0, eq)), std::string(part.substr(eq + 1)));
    }
    if (!in.done()) throw FormatError("trailing content after KEY", in.number());
  }
  if (inst.f.label_bound() > alphabet || inst.g.label_bound() > alphabet) {
    throw FormatError("tree label outside alphabet", 0);
  }
  return inst;
}

std::string emit_graph(const WeightedGraph& g) {
  std::ostringstream out;
  out << "GRAPH v1\n" << g.size() << "\n";
  for (std::size_t i = 1; i <= g.size(); ++i) {
    for (std::size_t j = i + 1; j <= g.size(); ++j) {
      out << i << ' ' << j << ' ' << g.weight(i, j) << "\n";
    }
  }
  return out.str();
}

WeightedGraph parse_graph(std::string_view text) {
  Lines in(text);
  if (in.next() != "GRAPH v1") throw FormatError("expected header GRAPH v1", 1);
  std::size_t n = in.number();
  const auto size = parse_uint<std::size_t>(in.next(), n, "node count");
  WeightedGraph g(size);
  while (!in.done()) {
    n = in.number();
    const auto parts = split(in.next());
    if (parts.empty()) continue;
    if (parts.size() != 3) throw FormatError("expected '<i> <j> <w>'", n);
    const auto i = parse_uint<std::size_t>(parts[0], n, "node");
    const auto j = parse_uint<std::size_t>(parts[1], n, "node");
    const Cost w = parse_cost(parts[2], n);
    if (w.is_infinite()) throw FormatError("edge weight must be finite", n);
    if (i == j || i < 1 || j < 1 || i > size || j > size) throw FormatError("bad node pair", n);
    if (g.has_weight(i, j)) throw FormatError("duplicate pair", n);
    g.set_weight(i, j, w);
  }
  if (!g.is_complete()) throw FormatError("graph is not complete", in.number());
  return g;
}

KeyFields key_fields(const TriangleKey& key) {
  return {{"M", key.M.to_string()},
          {"n", std::to_string(key.n)},
          {"maxAbs", key.max_abs_weight.to_string()}};
}

KeyFields key_fields(const CliqueKey& key) {
  return {{"M", key.M.to_string()},
          {"N", std::to_string(key.N)},
          {"k", std::to_string(key.k)},
          {"Lambda", key.lambda.to_string()},
          {"n", std::to_string(key.n)}};
}

bool is_clique_key(const KeyFields& key) {
  return std::any_of(key.begin(), key.end(), [](const auto& f) { return f.first == "Lambda"; });
}

TriangleKey triangle_key(const KeyFields& key) {
  return {cost_field(key, "M"), size_field(key, "n"), cost_field(key, "maxAbs")};
}

CliqueKey clique_key(const KeyFields& key) {
  return {cost_field(key, "M"), size_field(key, "N"), size_field(key, "k"),
          cost_field(key, "Lambda"), size_field(key, "n")};
}

}  // namespace tedhard
