#include "amrkit/repair.hpp"

#include <memory>
#include <unordered_map>

namespace amrkit {

RepairReport& RepairReport::operator+=(const RepairReport& o) {
  parens_added += o.parens_added;
  parens_dropped += o.parens_dropped;
  segments_removed += o.segments_removed;
  concepts_inserted += o.concepts_inserted;
  variables_inserted += o.variables_inserted;
  variables_renumbered += o.variables_renumbered;
  fallback = fallback || o.fallback;
  return *this;
}

namespace {

struct Tok {
  TokenClass cls;
  const std::string* text;
};

struct RNode;

struct REdge {
  std::string label;
  TokenClass kind;  // kOpen (child node), kVariable (reference), kAtom (constant)
  std::string value;
  std::unique_ptr<RNode> child;
};

struct RNode {
  std::string var;  // empty when inserted
  std::string concept_label;
  std::vector<REdge> edges;
};

class Repairer {
 public:
  Repairer(std::vector<Tok> toks, RepairReport& report) : toks_(std::move(toks)), rep_(report) {}

  std::unique_ptr<RNode> run() {
    while (pos_ < toks_.size() && toks_[pos_].cls != TokenClass::kOpen) ++pos_;
    if (pos_ > 0) ++rep_.segments_removed;
    if (pos_ == toks_.size()) return nullptr;
    auto root = parse_node();
    if (pos_ < toks_.size()) ++rep_.segments_removed;
    return root;
  }

 private:
  bool at(TokenClass c) const { return pos_ < toks_.size() && toks_[pos_].cls == c; }

  std::unique_ptr<RNode> parse_node() {
    ++pos_;  // '('
    auto node = std::make_unique<RNode>();
    if (at(TokenClass::kVariable)) {
      node->var = *toks_[pos_++].text;
    } else {
      ++rep_.variables_inserted;
    }
    if (at(TokenClass::kAtom)) {
      node->concept_label = *toks_[pos_++].text;
    } else {
      node->concept_label = kUnknownConcept;
      ++rep_.concepts_inserted;
    }
    while (true) {
      if (pos_ >= toks_.size()) {
        ++rep_.parens_added;
        return node;
      }
      const TokenClass c = toks_[pos_].cls;
      if (c == TokenClass::kClose) {
        ++pos_;
        return node;
      }
      if (c == TokenClass::kOpen) {
        skip_segment();
        ++rep_.segments_removed;
        continue;
      }
      if (c != TokenClass::kRelation) {
        ++pos_;
        ++rep_.segments_removed;
        continue;
      }
      const std::string& label = *toks_[pos_].text;
      const TokenClass next = pos_ + 1 < toks_.size() ? toks_[pos_ + 1].cls : TokenClass::kClose;
      if (next == TokenClass::kOpen) {
        ++pos_;
        REdge e{label, TokenClass::kOpen, {}, nullptr};
        e.child = parse_node();
        node->edges.push_back(std::move(e));
      } else if (next == TokenClass::kVariable || next == TokenClass::kAtom) {
        node->edges.push_back(REdge{label, next, *toks_[pos_ + 1].text, nullptr});
        pos_ += 2;
      } else {
        ++pos_;
        ++rep_.segments_removed;
      }
    }
  }

  // Consumes a bracketed segment up to its matching ')' (or the end).
  void skip_segment() {
    std::size_t depth = 0;
    while (pos_ < toks_.size()) {
      const TokenClass c = toks_[pos_++].cls;
      if (c == TokenClass::kOpen) {
        ++depth;
      } else if (c == TokenClass::kClose && --depth == 0) {
        return;
      }
    }
  }

  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
  RepairReport& rep_;
};

class Emitter {
 public:
  Emitter(LinearSeq& out, RepairReport& report) : out_(out), rep_(report) {}

  void emit(const RNode& n) {
    const std::size_t index = next_++;
    if (!n.var.empty()) {
      if (mapping_.count(n.var) != 0) {
        ++rep_.variables_renumbered;
      } else {
        mapping_.emplace(n.var, index);
        if (variable_index(n.var) != index) ++rep_.variables_renumbered;
      }
    }
    out_.tokens.emplace_back("(");
    out_.tokens.push_back(variable_token(index));
    out_.tokens.push_back(n.concept_label);
    for (const REdge& e : n.edges) {
      if (e.kind == TokenClass::kVariable) {
        auto it = mapping_.find(e.value);
        if (it == mapping_.end()) {
          ++rep_.segments_removed;
          continue;
        }
        out_.tokens.push_back(e.label);
        out_.tokens.push_back(variable_token(it->second));
      } else if (e.kind == TokenClass::kAtom) {
        out_.tokens.push_back(e.label);
        out_.tokens.push_back(e.value);
      } else {
        out_.tokens.push_back(e.label);
        emit(*e.child);
      }
    }
    out_.tokens.emplace_back(")");
  }

 private:
  LinearSeq& out_;
  RepairReport& rep_;
  std::unordered_map<std::string, std::size_t> mapping_;
  std::size_t next_ = 0;
};

}  // namespace

RepairResult repair_with_report(std::span<const std::string> tokens) {
  RepairResult result;
  RepairReport& rep = result.report;

  std::vector<Tok> kept;
  kept.reserve(tokens.size());
  bool in_garbage = false;
  std::size_t depth = 0;
  for (const std::string& t : tokens) {
    const TokenClass c = classify_token(t);
    if (c == TokenClass::kInvalid) {
      if (!in_garbage) ++rep.segments_removed;
      in_garbage = true;
      continue;
    }
    in_garbage = false;
    if (c == TokenClass::kOpen) {
      ++depth;
    } else if (c == TokenClass::kClose) {
      if (depth == 0) {
        ++rep.parens_dropped;
        continue;
      }
      --depth;
    }
    kept.push_back({c, &t});
  }

  auto root = Repairer(std::move(kept), rep).run();
  if (!root) {
    rep.fallback = true;
    result.seq.tokens = {"(", variable_token(0), kEmptyConcept, ")"};
    return result;
  }
  Emitter(result.seq, rep).emit(*root);
  return result;
}

LinearSeq repair(std::span<const std::string> tokens) {
  return repair_with_report(tokens).seq;
}

}  // namespace amrkit
