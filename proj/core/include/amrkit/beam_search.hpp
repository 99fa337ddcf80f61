#pragma once

#include <span>
#include <string>
#include <vector>

#include "amrkit/seq_model.hpp"

namespace amrkit::kd {

struct BeamHypothesis {
  std::vector<TokenId> tokens;  // ends with EOS once finished
  double log_prob = 0.0;        // sum of per-step model log probabilities
  bool finished = false;
  bool truncated = false;       // EOS was appended at max_len, not generated
};

// Length-unnormalized beam search over the same outcome space as
// enumerate_outcomes. Each step expands every live hypothesis by every
// token with non-zero probability and keeps the best (beam_size - finished)
// candidates; candidates ending in EOS move to the finished set and keep
// their slot. Returns up to beam_size finished hypotheses, best first.
std::vector<BeamHypothesis> beam_search(const SeqModel& model, std::span<const std::string> x,
                                        std::size_t beam_size, std::size_t max_len);

// Argmax rollout; equals beam_search with beam_size 1.
BeamHypothesis greedy_decode(const SeqModel& model, std::span<const std::string> x,
                             std::size_t max_len);

}  // namespace amrkit::kd
