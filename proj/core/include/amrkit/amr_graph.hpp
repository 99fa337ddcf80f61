#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace amrkit {

enum class NodeKind { kVariable, kConstant };

struct Node {
  std::string id;
  // Concept label for variables (`want-01`), literal for constants (`-`,
  // `5`, `"Paris"` with its quotes).
  std::string label;
  NodeKind kind = NodeKind::kVariable;

  bool is_variable() const { return kind == NodeKind::kVariable; }
  friend bool operator==(const Node&, const Node&) = default;
};

struct Edge {
  std::string src;
  std::string label;  // always starts with ':'
  std::string tgt;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// `# ...` comment lines that preceded a PENMAN expression. Raw lines are
// kept for verbatim output; `::key value` fields are indexed for lookup.
class Metadata {
 public:
  Metadata() = default;
  explicit Metadata(std::vector<std::string> lines);

  const std::vector<std::string>& lines() const { return lines_; }
  std::optional<std::string> get(std::string_view key) const;
  bool empty() const { return lines_.empty(); }

  friend bool operator==(const Metadata& a, const Metadata& b) {
    return a.lines_ == b.lines_;
  }

 private:
  std::vector<std::string> lines_;
  std::vector<std::pair<std::string, std::string>> fields_;
};

// Rooted, directed, labeled AMR graph. Immutable once constructed; the
// constructor enforces every structural invariant and throws InvalidGraph.
//
// Constants are nodes of kind kConstant. Their ids are internal handles and
// never appear in PENMAN or linearized output.
class AmrGraph {
 public:
  AmrGraph(std::vector<Node> nodes, std::vector<Edge> edges, std::string root,
           Metadata metadata = {});

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& root() const { return root_; }
  const Metadata& metadata() const { return metadata_; }

  const Node& node(std::string_view id) const;
  const Node* find(std::string_view id) const;
  std::size_t index_of(std::string_view id) const;

  std::size_t variable_count() const;
  // Edge indices leaving `node_index`, in edge-list order.
  const std::vector<std::size_t>& out_edges(std::size_t node_index) const {
    return out_edges_[node_index];
  }
  std::size_t edge_target_index(std::size_t edge_index) const {
    return edge_targets_[edge_index];
  }

  AmrGraph with_metadata(Metadata metadata) const;

 private:
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::string root_;
  Metadata metadata_;
  std::vector<std::vector<std::size_t>> out_edges_;
  std::vector<std::size_t> edge_targets_;
};

// Incremental construction helper. Constants get fresh internal ids.
class GraphBuilder {
 public:
  const std::string& add_variable(std::string id, std::string label);
  const std::string& add_constant(std::string literal);
  void add_edge(std::string src, std::string label, std::string tgt);
  bool has_node(std::string_view id) const;

  AmrGraph build(std::string root, Metadata metadata = {}) &&;

 private:
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::size_t next_constant_ = 0;
};

bool is_valid_variable_name(std::string_view name);
bool is_valid_relation(std::string_view label);
// Concept labels and constant literals share one lexical class.
bool is_valid_atom(std::string_view atom);
bool is_quoted(std::string_view atom);

enum class TripleKind { kInstance, kAttribute, kRelation };

struct Triple {
  TripleKind kind;
  std::string src;
  std::string label;  // without the leading ':'; `instance` / `TOP` for the fixed kinds
  std::string tgt;

  friend bool operator==(const Triple&, const Triple&) = default;
};

// Instance, attribute, and relation triples plus a TOP attribute for the
// root. Inverse roles (`:ARG0-of`) are normalized to their forward form when
// both endpoints are variables.
std::vector<Triple> to_triples(const AmrGraph& g);

// `:X-of` roles other than the lexicalized ones (`:consist-of`, ...).
bool is_inverse_role(std::string_view label);

}  // namespace amrkit
