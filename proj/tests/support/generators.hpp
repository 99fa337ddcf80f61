#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "amrkit/amr_graph.hpp"
#include "amrkit/corpus.hpp"
#include "amrkit/random.hpp"
#include "amrkit/toy_model.hpp"

namespace amrkit::testing {

struct GraphGenOptions {
  std::size_t max_nodes = 12;     // variables plus constants
  std::size_t max_variables = 12;
  std::size_t max_reentrancies = 2;
  // Smaller pools make more concepts and labels collide, which is what
  // makes mapping search non-trivial.
  std::size_t concept_pool = 8;
  std::size_t label_pool = 6;
};

// Random rooted graph: a spanning tree over the variables, up to
// max_reentrancies extra variable-to-variable edges, and some constants.
// Variable names are random and the edge list is shuffled.
AmrGraph random_graph(Rng& rng, const GraphGenOptions& opt = {});

// Copy of `g` with a few concepts relabeled and edges relabeled or
// dropped (only edges whose removal keeps the graph connected).
AmrGraph perturb(const AmrGraph& g, Rng& rng);

// Output tokens a, b (and EOS) for the small models used by the oracles.
kd::Vocabulary small_vocabulary(std::size_t non_eos_tokens = 2);

// Toy model whose rows for the given inputs hold random positive counts,
// so every step distribution is random but strictly positive.
kd::ToyCondModel random_toy_model(Rng& rng, const kd::Vocabulary& vocab,
                                  const std::vector<kd::Sentence>& inputs, std::size_t max_len);

// Toy model fitted on a few random target sequences per input, so its
// distributions are peaked like a trained parser's.
kd::ToyCondModel peaked_toy_model(Rng& rng, const kd::Vocabulary& vocab,
                                  const std::vector<kd::Sentence>& inputs, std::size_t max_len);

// Synthetic English corpus: a gold graph per record and a sentence made
// from its concepts, unique per record.
struct SyntheticItem {
  std::string sentence;
  AmrGraph graph;
};
std::vector<SyntheticItem> synthetic_corpus(std::size_t n, std::uint64_t seed);
std::vector<CorpusRecord> gold_records(const std::vector<SyntheticItem>& items);

}  // namespace amrkit::testing
