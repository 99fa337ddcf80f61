#include "amrkit/penman.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "amrkit/errors.hpp"

namespace amrkit {

namespace {

enum class Tok { kOpen, kClose, kRole, kAtom };

struct Token {
  Tok type;
  std::string text;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_delim(char c) { return is_space(c) || c == '(' || c == ')'; }

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (is_space(c)) {
      ++i;
    } else if (c == '(') {
      out.push_back({Tok::kOpen, "("});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::kClose, ")"});
      ++i;
    } else if (c == '"') {
      std::size_t j = i + 1;
      while (j < s.size() && s[j] != '"') {
        if (s[j] == '\\') ++j;
        ++j;
      }
      if (j >= s.size()) throw MalformedPenman("unterminated string literal");
      out.push_back({Tok::kAtom, std::string(s.substr(i, j + 1 - i))});
      i = j + 1;
      if (i < s.size() && !is_delim(s[i])) {
        throw MalformedPenman("characters directly after string literal");
      }
    } else {
      std::size_t j = i;
      while (j < s.size() && !is_delim(s[j])) ++j;
      std::string text(s.substr(i, j - i));
      if (text.find('"') != std::string::npos) {
        throw MalformedPenman("stray quote in '" + text + "'");
      }
      out.push_back({c == ':' ? Tok::kRole : Tok::kAtom, std::move(text)});
      i = j;
    }
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) { collect_definitions(); }

  AmrGraph parse(Metadata metadata) {
    if (toks_.empty()) throw MalformedPenman("empty input");
    if (toks_[0].type != Tok::kOpen) throw MalformedPenman("expression must start with '('");
    std::string root = parse_node();
    if (pos_ != toks_.size()) {
      throw MalformedPenman("unexpected '" + toks_[pos_].text + "' after the top node");
    }
    try {
      return std::move(builder_).build(std::move(root), std::move(metadata));
    } catch (const InvalidGraph& e) {
      throw MalformedPenman(e.what());
    }
  }

 private:
  // A node header is `( var / concept`, written with or without spaces
  // around the slash.
  struct Header {
    std::string var;
    std::string concept_label;
  };

  Header read_header() {
    Header h;
    if (pos_ >= toks_.size() || toks_[pos_].type != Tok::kAtom) {
      throw MalformedPenman("missing variable after '('");
    }
    std::string first = toks_[pos_++].text;
    const std::size_t slash = first.find('/');
    std::string rest;
    if (slash != std::string::npos) {
      h.var = first.substr(0, slash);
      rest = first.substr(slash + 1);
    } else {
      h.var = std::move(first);
      if (pos_ < toks_.size() && toks_[pos_].type == Tok::kAtom && toks_[pos_].text[0] == '/') {
        rest = toks_[pos_++].text.substr(1);
      } else {
        throw MalformedPenman("missing '/ concept' after variable '" + h.var + "'");
      }
    }
    if (rest.empty()) {
      if (pos_ >= toks_.size() || toks_[pos_].type != Tok::kAtom) {
        throw MalformedPenman("missing concept after '/' for variable '" + h.var + "'");
      }
      rest = toks_[pos_++].text;
    }
    h.concept_label = std::move(rest);
    if (!is_valid_variable_name(h.var)) throw MalformedPenman("invalid variable '" + h.var + "'");
    return h;
  }

  std::string parse_node() {
    ++pos_;  // '('
    Header h = read_header();
    if (!defined_.insert(h.var).second) {
      throw MalformedPenman("variable '" + h.var + "' defined twice");
    }
    builder_.add_variable(h.var, h.concept_label);
    while (true) {
      if (pos_ >= toks_.size()) throw MalformedPenman("unbalanced parentheses: missing ')'");
      const Token& t = toks_[pos_];
      if (t.type == Tok::kClose) {
        ++pos_;
        return h.var;
      }
      if (t.type != Tok::kRole) throw MalformedPenman("expected a role, found '" + t.text + "'");
      std::string role = t.text;
      ++pos_;
      if (pos_ >= toks_.size()) throw MalformedPenman("role " + role + " has no value");
      const Token& v = toks_[pos_];
      if (v.type == Tok::kOpen) {
        std::string child = parse_node();
        builder_.add_edge(h.var, std::move(role), std::move(child));
      } else if (v.type == Tok::kAtom) {
        ++pos_;
        if (defined_.count(v.text) != 0) {
          builder_.add_edge(h.var, std::move(role), v.text);
        } else if (all_definitions_.count(v.text) != 0) {
          throw MalformedPenman("variable '" + v.text + "' referenced before its definition");
        } else {
          if (!is_valid_atom(v.text)) throw MalformedPenman("invalid constant '" + v.text + "'");
          const std::string& id = builder_.add_constant(v.text);
          builder_.add_edge(h.var, std::move(role), id);
        }
      } else {
        throw MalformedPenman("role " + role + " has no value");
      }
    }
  }

  void collect_definitions() {
    for (std::size_t i = 0; i + 1 < toks_.size(); ++i) {
      if (toks_[i].type == Tok::kOpen && toks_[i + 1].type == Tok::kAtom) {
        const std::string& t = toks_[i + 1].text;
        all_definitions_.insert(t.substr(0, t.find('/')));
      }
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  GraphBuilder builder_;
  std::unordered_set<std::string> defined_;
  std::unordered_set<std::string> all_definitions_;
};

std::string_view trim_left(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  return s;
}

}  // namespace

AmrGraph parse_penman(std::string_view text) {
  std::vector<std::string> comments;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    std::string_view body = trim_left(line);
    if (!body.empty() && body.front() == '#') {
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      comments.emplace_back(line);
    } else if (!body.empty()) {
      break;
    }
    pos = eol + 1;
  }
  std::string_view expr = pos < text.size() ? text.substr(pos) : std::string_view{};
  Parser parser(tokenize(expr));
  return parser.parse(Metadata(std::move(comments)));
}

std::string serialize_penman(const AmrGraph& g) {
  std::string out;
  for (const auto& line : g.metadata().lines()) {
    out += line;
    out += '\n';
  }
  std::vector<bool> expanded(g.nodes().size(), false);
  // Iterative DFS over (node, next out-edge) frames.
  struct Frame {
    std::size_t node;
    std::size_t next = 0;
  };
  const std::size_t root = g.index_of(g.root());
  std::vector<Frame> stack;
  auto open = [&](std::size_t n) {
    expanded[n] = true;
    out += '(';
    out += g.nodes()[n].id;
    out += " / ";
    out += g.nodes()[n].label;
    stack.push_back({n});
  };
  open(root);
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& outs = g.out_edges(f.node);
    if (f.next == outs.size()) {
      out += ')';
      stack.pop_back();
      continue;
    }
    const std::size_t e = outs[f.next++];
    const std::size_t t = g.edge_target_index(e);
    out += ' ';
    out += g.edges()[e].label;
    out += ' ';
    const Node& tgt = g.nodes()[t];
    if (!tgt.is_variable()) {
      out += tgt.label;
    } else if (expanded[t]) {
      out += tgt.id;
    } else {
      open(t);
    }
  }
  return out;
}

std::vector<std::string> split_amr_blocks(std::string_view text) {
  std::vector<std::string> blocks;
  std::string current;
  bool has_expression = false;
  auto flush = [&] {
    if (has_expression) blocks.push_back(current);
    current.clear();
    has_expression = false;
  };
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::string_view body = trim_left(line);
    if (body.empty()) {
      flush();
    } else {
      if (body.front() != '#') has_expression = true;
      current.append(line);
      current.push_back('\n');
    }
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  flush();
  return blocks;
}

std::vector<AmrGraph> read_amr_file(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::vector<AmrGraph> graphs;
  const auto blocks = split_amr_blocks(text);
  graphs.reserve(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    try {
      graphs.push_back(parse_penman(blocks[i]));
    } catch (const MalformedPenman& e) {
      throw MalformedPenman("block " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return graphs;
}

std::vector<AmrGraph> read_amr_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return read_amr_file(in);
}

void write_amr_file(std::ostream& out, std::span<const AmrGraph> graphs) {
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (i > 0) out << '\n';
    out << serialize_penman(graphs[i]) << '\n';
  }
}

}  // namespace amrkit
