#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "amrkit/amr_graph.hpp"

namespace amrkit {

// Parses one PENMAN expression, optionally preceded by `#` comment lines
// (kept as Metadata). Indentation and line breaks are insignificant.
//
// Rejected with MalformedPenman: unbalanced parentheses, a node without
// `/ concept`, a role without a value, a variable defined twice, a variable
// referenced before the node that defines it, and trailing tokens after the
// top node.
AmrGraph parse_penman(std::string_view text);

// Metadata lines (one per line) followed by a single-line expression.
// Re-entrant nodes are expanded at their first mention in depth-first edge
// order and emitted as bare variables afterwards.
std::string serialize_penman(const AmrGraph& g);

// AMR release text: blocks separated by blank lines, each holding optional
// comment lines and one expression. Comment-only blocks are skipped.
std::vector<std::string> split_amr_blocks(std::string_view text);
std::vector<AmrGraph> read_amr_file(std::istream& in);
std::vector<AmrGraph> read_amr_file(const std::string& path);
void write_amr_file(std::ostream& out, std::span<const AmrGraph> graphs);

}  // namespace amrkit
