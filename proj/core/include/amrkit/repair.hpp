#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "amrkit/linearize.hpp"

namespace amrkit {

struct RepairReport {
  std::size_t parens_added = 0;
  std::size_t parens_dropped = 0;
  std::size_t segments_removed = 0;
  std::size_t concepts_inserted = 0;
  std::size_t variables_inserted = 0;
  std::size_t variables_renumbered = 0;
  bool fallback = false;

  bool clean() const {
    return parens_added == 0 && parens_dropped == 0 && segments_removed == 0 &&
           concepts_inserted == 0 && variables_inserted == 0 && variables_renumbered == 0 &&
           !fallback;
  }
  RepairReport& operator+=(const RepairReport& o);
  friend bool operator==(const RepairReport&, const RepairReport&) = default;
};

struct RepairResult {
  LinearSeq seq;
  RepairReport report;
};

inline constexpr const char* kUnknownConcept = "amr-unknown";
inline constexpr const char* kEmptyConcept = "amr-empty";

// Turns any token list into a sequence that delinearize accepts. Fixes are
// applied in this order:
//   1. tokens outside the sequence alphabet and unmatched ')' are dropped;
//   2. relations without a following value are dropped, as are stray atoms,
//      variables, and bracketed segments where a relation is expected;
//   3. `amr-unknown` is inserted for a node with no concept (and a fresh
//      variable for '(' not followed by one);
//   4. missing ')' are appended;
//   5. variables are renumbered 0..n-1 in first-visit order and references
//      to variables not defined earlier are dropped with their relation.
// Input with no '(' at all becomes `( <V0> amr-empty )`. Valid input is
// returned unchanged, so the function is idempotent.
RepairResult repair_with_report(std::span<const std::string> tokens);
LinearSeq repair(std::span<const std::string> tokens);
inline LinearSeq repair(const LinearSeq& s) { return repair(s.tokens); }

}  // namespace amrkit
