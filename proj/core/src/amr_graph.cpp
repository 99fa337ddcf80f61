#include "amrkit/amr_graph.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

#include "amrkit/errors.hpp"

namespace amrkit {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool looks_like_variable_token(std::string_view s) {
  if (s.size() < 4 || s.front() != '<' || s.back() != '>' || s[1] != 'V') return false;
  return std::all_of(s.begin() + 2, s.end() - 1,
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Metadata::Metadata(std::vector<std::string> lines) : lines_(std::move(lines)) {
  for (const auto& line : lines_) {
    std::size_t pos = line.find("::");
    while (pos != std::string::npos) {
      std::size_t key_end = pos + 2;
      while (key_end < line.size() && !is_space(line[key_end])) ++key_end;
      std::string key = line.substr(pos + 2, key_end - pos - 2);
      std::size_t next = line.find(" ::", key_end);
      std::string value = trim(std::string_view(line).substr(
          key_end, next == std::string::npos ? std::string::npos : next - key_end));
      if (!key.empty()) fields_.emplace_back(std::move(key), std::move(value));
      pos = next == std::string::npos ? next : next + 1;
    }
  }
}

std::optional<std::string> Metadata::get(std::string_view key) const {
  for (const auto& [k, v] : fields_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

bool is_quoted(std::string_view atom) {
  return atom.size() >= 2 && atom.front() == '"' && atom.back() == '"';
}

bool is_valid_variable_name(std::string_view name) {
  if (name.empty()) return false;
  const char first = name.front();
  if (first == '<' || first == ':' || first == '#') return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return is_space(c) || c == '(' || c == ')' || c == '"' || c == '/' || c == ':';
  });
}

bool is_valid_relation(std::string_view label) {
  if (label.size() < 2 || label.front() != ':') return false;
  return std::none_of(label.begin() + 1, label.end(), [](char c) {
    return is_space(c) || c == '(' || c == ')' || c == '"' || c == ':';
  });
}

bool is_valid_atom(std::string_view atom) {
  if (atom.empty()) return false;
  if (atom.front() == '"') {
    if (!is_quoted(atom)) return false;
    for (std::size_t i = 1; i + 1 < atom.size(); ++i) {
      const char c = atom[i];
      if (c == '\n' || c == '\r') return false;
      if (c == '\\') {
        ++i;  // escaped character
        if (i + 1 >= atom.size()) return false;
      } else if (c == '"') {
        return false;
      }
    }
    return true;
  }
  if (atom.front() == ':' || atom == "/") return false;
  if (looks_like_variable_token(atom)) return false;
  return std::none_of(atom.begin(), atom.end(), [](char c) {
    return is_space(c) || c == '(' || c == ')' || c == '"';
  });
}

bool is_inverse_role(std::string_view label) {
  static constexpr std::array<std::string_view, 3> kLexical = {
      ":consist-of", ":prep-on-behalf-of", ":prep-out-of"};
  if (label.size() <= 4 || label.substr(label.size() - 3) != "-of") return false;
  std::string lower(label);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return std::find(kLexical.begin(), kLexical.end(), lower) == kLexical.end();
}

AmrGraph::AmrGraph(std::vector<Node> nodes, std::vector<Edge> edges, std::string root,
                   Metadata metadata)
    : nodes_(std::move(nodes)),
      edges_(std::move(edges)),
      root_(std::move(root)),
      metadata_(std::move(metadata)) {
  std::unordered_map<std::string_view, std::size_t> index;
  std::unordered_set<std::string_view> variable_ids;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    if (n.id.empty()) throw InvalidGraph("node with empty id");
    if (!index.emplace(n.id, i).second) throw InvalidGraph("duplicate node id '" + n.id + "'");
    if (!is_valid_atom(n.label)) {
      throw InvalidGraph("node '" + n.id + "' has invalid label '" + n.label + "'");
    }
    if (n.is_variable()) {
      if (!is_valid_variable_name(n.id)) {
        throw InvalidGraph("invalid variable name '" + n.id + "'");
      }
      variable_ids.insert(n.id);
    }
  }
  for (const Node& n : nodes_) {
    if (!n.is_variable() && variable_ids.count(n.label) != 0) {
      throw InvalidGraph("constant '" + n.label + "' collides with a variable name");
    }
  }

  auto root_it = index.find(root_);
  if (root_it == index.end()) throw InvalidGraph("root '" + root_ + "' is not a node");
  if (!nodes_[root_it->second].is_variable()) throw InvalidGraph("root must be a variable");

  out_edges_.assign(nodes_.size(), {});
  edge_targets_.reserve(edges_.size());
  std::vector<std::size_t> in_degree(nodes_.size(), 0);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (!is_valid_relation(edge.label)) throw InvalidGraph("invalid relation '" + edge.label + "'");
    auto s = index.find(edge.src);
    auto t = index.find(edge.tgt);
    if (s == index.end()) throw InvalidGraph("edge source '" + edge.src + "' is not a node");
    if (t == index.end()) throw InvalidGraph("edge target '" + edge.tgt + "' is not a node");
    if (!nodes_[s->second].is_variable()) {
      throw InvalidGraph("constant '" + nodes_[s->second].label + "' has an outgoing edge");
    }
    out_edges_[s->second].push_back(e);
    edge_targets_.push_back(t->second);
    ++in_degree[t->second];
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!nodes_[i].is_variable() && in_degree[i] != 1) {
      throw InvalidGraph("constant node '" + nodes_[i].id + "' must have exactly one incoming edge");
    }
  }

  std::vector<bool> seen(nodes_.size(), false);
  std::vector<std::size_t> stack{root_it->second};
  seen[root_it->second] = true;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t e : out_edges_[u]) {
      const std::size_t v = edge_targets_[e];
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!seen[i]) throw InvalidGraph("node '" + nodes_[i].id + "' is unreachable from the root");
  }
}

const Node* AmrGraph::find(std::string_view id) const {
  for (const Node& n : nodes_) {
    if (n.id == id) return &n;
  }
  return nullptr;
}

const Node& AmrGraph::node(std::string_view id) const {
  const Node* n = find(id);
  if (n == nullptr) throw InvalidGraph("no node '" + std::string(id) + "'");
  return *n;
}

std::size_t AmrGraph::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].id == id) return i;
  }
  throw InvalidGraph("no node '" + std::string(id) + "'");
}

std::size_t AmrGraph::variable_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.is_variable(); }));
}

AmrGraph AmrGraph::with_metadata(Metadata metadata) const {
  AmrGraph copy = *this;
  copy.metadata_ = std::move(metadata);
  return copy;
}

const std::string& GraphBuilder::add_variable(std::string id, std::string label) {
  nodes_.push_back(Node{std::move(id), std::move(label), NodeKind::kVariable});
  return nodes_.back().id;
}

const std::string& GraphBuilder::add_constant(std::string literal) {
  nodes_.push_back(Node{"#" + std::to_string(next_constant_++), std::move(literal),
                        NodeKind::kConstant});
  return nodes_.back().id;
}

void GraphBuilder::add_edge(std::string src, std::string label, std::string tgt) {
  edges_.push_back(Edge{std::move(src), std::move(label), std::move(tgt)});
}

bool GraphBuilder::has_node(std::string_view id) const {
  return std::any_of(nodes_.begin(), nodes_.end(), [&](const Node& n) { return n.id == id; });
}

AmrGraph GraphBuilder::build(std::string root, Metadata metadata) && {
  return AmrGraph(std::move(nodes_), std::move(edges_), std::move(root), std::move(metadata));
}

std::vector<Triple> to_triples(const AmrGraph& g) {
  std::vector<Triple> out;
  out.reserve(g.nodes().size() + g.edges().size() + 1);
  for (const Node& n : g.nodes()) {
    if (n.is_variable()) out.push_back({TripleKind::kInstance, n.id, "instance", n.label});
  }
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const Edge& edge = g.edges()[e];
    const Node& tgt = g.nodes()[g.edge_target_index(e)];
    std::string label = edge.label.substr(1);
    if (!tgt.is_variable()) {
      out.push_back({TripleKind::kAttribute, edge.src, std::move(label), tgt.label});
    } else if (is_inverse_role(edge.label)) {
      label.resize(label.size() - 3);
      out.push_back({TripleKind::kRelation, edge.tgt, std::move(label), edge.src});
    } else {
      out.push_back({TripleKind::kRelation, edge.src, std::move(label), edge.tgt});
    }
  }
  out.push_back({TripleKind::kAttribute, g.root(), "TOP", g.node(g.root()).label});
  return out;
}

}  // namespace amrkit
