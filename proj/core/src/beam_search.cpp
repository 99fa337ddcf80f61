#include "amrkit/beam_search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "amrkit/kd_loss.hpp"

namespace amrkit::kd {

std::vector<BeamHypothesis> beam_search(const SeqModel& model, std::span<const std::string> x,
                                        std::size_t beam_size, std::size_t max_len) {
  if (beam_size == 0) throw std::invalid_argument("beam_size must be >= 1");
  if (max_len == 0) throw std::invalid_argument("max_len must be >= 1");
  const TokenId eos = model.vocabulary().eos();

  std::vector<BeamHypothesis> live{BeamHypothesis{}};
  std::vector<BeamHypothesis> finished;
  auto better = [](const BeamHypothesis& a, const BeamHypothesis& b) {
    return ranks_before(a.log_prob, a.tokens, b.log_prob, b.tokens);
  };

  for (std::size_t step = 1; step <= max_len && !live.empty(); ++step) {
    std::vector<BeamHypothesis> candidates;
    candidates.reserve(live.size() * model.vocabulary().size());
    for (const auto& h : live) {
      const auto dist = model.next_dist(h.tokens, x);
      for (TokenId v = 0; v < dist.size(); ++v) {
        if (!(dist[v] > 0.0)) continue;
        BeamHypothesis c{h.tokens, h.log_prob + std::log(dist[v]), false, false};
        c.tokens.push_back(v);
        if (v == eos) {
          c.finished = true;
        } else if (step == max_len) {
          c.tokens.push_back(eos);
          c.finished = true;
          c.truncated = true;
        }
        candidates.push_back(std::move(c));
      }
    }
    const std::size_t capacity = beam_size - finished.size();
    if (candidates.size() > capacity) {
      std::partial_sort(candidates.begin(), candidates.begin() + static_cast<long>(capacity),
                        candidates.end(), better);
      candidates.resize(capacity);
    } else {
      std::sort(candidates.begin(), candidates.end(), better);
    }
    live.clear();
    for (auto& c : candidates) {
      if (c.finished) finished.push_back(std::move(c));
      else live.push_back(std::move(c));
    }
    if (finished.size() >= beam_size) break;
  }
  std::sort(finished.begin(), finished.end(), better);
  return finished;
}

BeamHypothesis greedy_decode(const SeqModel& model, std::span<const std::string> x,
                             std::size_t max_len) {
  return beam_search(model, x, 1, max_len).front();
}

}  // namespace amrkit::kd
