#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "amrkit/amr_graph.hpp"

namespace amrkit {

// Flat token sequence for a graph: `( <V0> want-01 :ARG0 ( <V1> boy ) )`.
// Variable tokens are numbered in first-visit order; a node's first visit
// expands it, later visits emit the bare variable token.
struct LinearSeq {
  std::vector<std::string> tokens;

  // Space-joined single line.
  std::string str() const;
  // Whitespace split that keeps quoted literals (which may contain spaces)
  // as one token.
  static LinearSeq parse(std::string_view line);

  friend bool operator==(const LinearSeq&, const LinearSeq&) = default;
};

enum class TokenClass { kOpen, kClose, kRelation, kVariable, kAtom, kInvalid };

TokenClass classify_token(std::string_view token);
std::string variable_token(std::size_t index);
// Index of a `<Vn>` token; caller must have checked classify_token.
std::size_t variable_index(std::string_view token);

LinearSeq linearize(const AmrGraph& g);

// Inverse of linearize. Variables are named v0..vn. Throws
// InvalidLinearization on any violated sequence invariant.
AmrGraph delinearize(const LinearSeq& s);

bool is_valid_linearization(const LinearSeq& s);

}  // namespace amrkit
