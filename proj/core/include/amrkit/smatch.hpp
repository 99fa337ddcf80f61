#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "amrkit/amr_graph.hpp"

namespace amrkit {

struct SmatchResult {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t matched = 0;
  std::size_t pred_total = 0;
  std::size_t gold_total = 0;
  // Partial injection from predicted variables to gold variables.
  std::vector<std::pair<std::string, std::string>> mapping;
};

// 2PR/(P+R), 0 when P+R = 0.
double f1_score(double precision, double recall);
SmatchResult make_smatch_result(std::size_t matched, std::size_t pred_total,
                                std::size_t gold_total);

inline constexpr std::size_t kDefaultRestarts = 4;
inline constexpr std::size_t kExactVariableBound = 8;

// Hill climbing over variable mappings. The first start maps variables with
// equal concepts greedily, the remaining restarts-1 starts are random
// injections drawn from `seed`. Moves are single-variable remaps and
// pairwise swaps; the best strictly improving move is taken until none is
// left. Deterministic for a given seed.
SmatchResult smatch_hill_climb(const AmrGraph& pred, const AmrGraph& gold,
                               std::size_t restarts = kDefaultRestarts, std::uint64_t seed = 0);

// Globally optimal mapping by exhaustive branch-and-bound enumeration,
// counting matched triples directly. Throws TooLarge when the smaller graph
// has more than `max_vars` variables.
SmatchResult smatch_exact(const AmrGraph& pred, const AmrGraph& gold,
                          std::size_t max_vars = kExactVariableBound);

}  // namespace amrkit
