#include "amrkit/linearize.hpp"

#include <cctype>

#include "amrkit/errors.hpp"

namespace amrkit {

std::string LinearSeq::str() const {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ' ';
    out += tokens[i];
  }
  return out;
}

LinearSeq LinearSeq::parse(std::string_view line) {
  LinearSeq s;
  std::size_t i = 0;
  auto space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (i < line.size()) {
    if (space(line[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    if (line[i] == '"') {
      ++j;
      while (j < line.size() && line[j] != '"') {
        if (line[j] == '\\' && j + 1 < line.size()) ++j;
        ++j;
      }
      if (j < line.size()) ++j;
    }
    while (j < line.size() && !space(line[j])) ++j;
    s.tokens.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return s;
}

TokenClass classify_token(std::string_view t) {
  if (t == "(") return TokenClass::kOpen;
  if (t == ")") return TokenClass::kClose;
  if (t.size() >= 4 && t.substr(0, 2) == "<V" && t.back() == '>') {
    bool digits = true;
    for (std::size_t i = 2; i + 1 < t.size(); ++i) {
      digits = digits && std::isdigit(static_cast<unsigned char>(t[i])) != 0;
    }
    if (digits) return TokenClass::kVariable;
  }
  if (is_valid_relation(t)) return TokenClass::kRelation;
  if (is_valid_atom(t)) return TokenClass::kAtom;
  return TokenClass::kInvalid;
}

std::string variable_token(std::size_t index) { return "<V" + std::to_string(index) + ">"; }

std::size_t variable_index(std::string_view token) {
  std::size_t v = 0;
  for (std::size_t i = 2; i + 1 < token.size(); ++i) {
    v = v * 10 + static_cast<std::size_t>(token[i] - '0');
  }
  return v;
}

LinearSeq linearize(const AmrGraph& g) {
  LinearSeq s;
  s.tokens.reserve(3 * g.nodes().size() + 2 * g.edges().size());
  std::vector<std::size_t> var_of(g.nodes().size(), SIZE_MAX);
  std::size_t next_var = 0;

  struct Frame {
    std::size_t node;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  auto open = [&](std::size_t n) {
    var_of[n] = next_var++;
    s.tokens.emplace_back("(");
    s.tokens.push_back(variable_token(var_of[n]));
    s.tokens.push_back(g.nodes()[n].label);
    stack.push_back({n});
  };
  open(g.index_of(g.root()));
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& outs = g.out_edges(f.node);
    if (f.next == outs.size()) {
      s.tokens.emplace_back(")");
      stack.pop_back();
      continue;
    }
    const std::size_t e = outs[f.next++];
    const std::size_t t = g.edge_target_index(e);
    s.tokens.push_back(g.edges()[e].label);
    const Node& tgt = g.nodes()[t];
    if (!tgt.is_variable()) {
      s.tokens.push_back(tgt.label);
    } else if (var_of[t] != SIZE_MAX) {
      s.tokens.push_back(variable_token(var_of[t]));
    } else {
      open(t);
    }
  }
  return s;
}

namespace {

class Delinearizer {
 public:
  explicit Delinearizer(const std::vector<std::string>& toks) : toks_(toks) {
    choose_prefix();
  }

  AmrGraph run() {
    if (toks_.empty()) fail("empty sequence");
    if (cls(0) != TokenClass::kOpen) fail("sequence must start with '('");
    std::string root = parse_node();
    if (pos_ != toks_.size()) fail("tokens after the top node");
    try {
      return std::move(builder_).build(std::move(root));
    } catch (const InvalidGraph& e) {
      throw InvalidLinearization(e.what());
    }
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidLinearization(why + " (at token " + std::to_string(pos_) + ")");
  }

  TokenClass cls(std::size_t i) const { return classify_token(toks_[i]); }

  std::string parse_node() {
    ++pos_;  // '('
    if (pos_ >= toks_.size() || cls(pos_) != TokenClass::kVariable) {
      fail("'(' must be followed by a variable token");
    }
    const std::size_t index = variable_index(toks_[pos_]);
    if (index != defined_) fail("variable " + toks_[pos_] + " out of first-visit order");
    ++pos_;
    if (pos_ >= toks_.size() || cls(pos_) != TokenClass::kAtom) {
      fail("variable definition without a concept");
    }
    std::string id = prefix_ + std::to_string(defined_++);
    builder_.add_variable(id, toks_[pos_++]);
    while (true) {
      if (pos_ >= toks_.size()) fail("missing ')'");
      switch (cls(pos_)) {
        case TokenClass::kClose:
          ++pos_;
          return id;
        case TokenClass::kRelation:
          break;
        default:
          fail("expected a relation or ')'");
      }
      std::string label = toks_[pos_++];
      if (pos_ >= toks_.size()) fail("relation without a value");
      switch (cls(pos_)) {
        case TokenClass::kOpen: {
          std::string child = parse_node();
          builder_.add_edge(id, std::move(label), std::move(child));
          break;
        }
        case TokenClass::kVariable: {
          const std::size_t ref = variable_index(toks_[pos_]);
          if (ref >= defined_) fail("reference to undefined variable " + toks_[pos_]);
          builder_.add_edge(id, std::move(label), prefix_ + std::to_string(ref));
          ++pos_;
          break;
        }
        case TokenClass::kAtom: {
          const std::string& c = builder_.add_constant(toks_[pos_++]);
          builder_.add_edge(id, std::move(label), c);
          break;
        }
        default:
          fail("relation without a value");
      }
    }
  }

  // Minted names are v0, v1, ... unless a constant in the sequence already
  // has that shape; then the prefix grows until it is unambiguous.
  void choose_prefix() {
    auto clashes = [&](const std::string& p) {
      for (const auto& t : toks_) {
        if (t.size() > p.size() && t.compare(0, p.size(), p) == 0 &&
            t.find_first_not_of("0123456789", p.size()) == std::string::npos) {
          return true;
        }
      }
      return false;
    };
    while (clashes(prefix_)) prefix_ += 'v';
  }

  const std::vector<std::string>& toks_;
  std::string prefix_ = "v";
  std::size_t pos_ = 0;
  std::size_t defined_ = 0;
  GraphBuilder builder_;
};

}  // namespace

AmrGraph delinearize(const LinearSeq& s) { return Delinearizer(s.tokens).run(); }

bool is_valid_linearization(const LinearSeq& s) {
  try {
    delinearize(s);
    return true;
  } catch (const InvalidLinearization&) {
    return false;
  }
}

}  // namespace amrkit
