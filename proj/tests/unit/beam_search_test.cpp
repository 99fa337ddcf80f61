#include <gtest/gtest.h>

#include <cmath>

#include "amrkit/beam_search.hpp"
#include "amrkit/kd_loss.hpp"
#include "generators.hpp"
#include "models.hpp"

namespace amrkit::kd {
namespace {

const Sentence kX = {"x"};

TEST(BeamSearch, DeterministicModelAnyBeam) {
  const Vocabulary v = testing::small_vocabulary();
  const std::vector<TokenId> y = {0, 1, 1, v.eos()};
  const auto m = testing::deterministic_model(v, y);
  for (std::size_t beam : {1u, 2u, 5u, 81u}) {
    const auto hyps = beam_search(m, kX, beam, 6);
    ASSERT_EQ(hyps.size(), 1u);
    EXPECT_EQ(hyps[0].tokens, y);
    EXPECT_EQ(hyps[0].log_prob, 0.0);
    EXPECT_TRUE(hyps[0].finished);
  }
}

TEST(BeamSearch, BeamOneIsGreedy) {
  Rng rng(1);
  const Vocabulary v = testing::small_vocabulary();
  for (int i = 0; i < 50; ++i) {
    const auto m = testing::random_toy_model(rng, v, {kX}, 4);
    std::vector<TokenId> greedy;
    double lp = 0.0;
    while (greedy.empty() || greedy.back() != v.eos()) {
      if (greedy.size() == 4) {
        greedy.push_back(v.eos());
        break;
      }
      const auto d = m.next_dist(greedy, kX);
      const auto best = static_cast<TokenId>(std::max_element(d.begin(), d.end()) - d.begin());
      lp += std::log(d[best]);
      greedy.push_back(best);
    }
    const auto h = greedy_decode(m, kX, 4);
    EXPECT_EQ(h.tokens, greedy);
    EXPECT_NEAR(h.log_prob, lp, 1e-12);
  }
}

TEST(BeamSearch, SaturatedBeamFindsExactMode) {
  Rng rng(2);
  const Vocabulary v = testing::small_vocabulary();
  for (int i = 0; i < 100; ++i) {
    const auto m = testing::random_toy_model(rng, v, {kX}, 4);
    EXPECT_EQ(beam_search(m, kX, 81, 4).front().tokens, exact_mode(m, kX, 4));
  }
}

TEST(BeamSearch, LogProbIsSumOfSteps) {
  Rng rng(3);
  const Vocabulary v = testing::small_vocabulary();
  const auto m = testing::random_toy_model(rng, v, {kX}, 5);
  for (const auto& h : beam_search(m, kX, 5, 5)) {
    double lp = 0.0;
    const std::size_t steps = h.truncated ? h.tokens.size() - 1 : h.tokens.size();
    for (std::size_t t = 0; t < steps; ++t) {
      lp += std::log(m.next_dist(std::span<const TokenId>(h.tokens).first(t), kX)[h.tokens[t]]);
    }
    EXPECT_NEAR(h.log_prob, lp, 1e-12);
    EXPECT_EQ(h.tokens.back(), v.eos());
  }
}

TEST(BeamSearch, SortedAndBounded) {
  Rng rng(4);
  const Vocabulary v = testing::small_vocabulary(3);
  const auto m = testing::random_toy_model(rng, v, {kX}, 6);
  const auto hyps = beam_search(m, kX, 4, 6);
  ASSERT_LE(hyps.size(), 4u);
  for (std::size_t i = 1; i < hyps.size(); ++i) {
    EXPECT_GE(hyps[i - 1].log_prob, hyps[i].log_prob);
  }
}

TEST(BeamSearch, TruncatedAtMaxLen) {
  const Vocabulary v = testing::small_vocabulary();
  // Never emits EOS.
  const auto m = testing::per_step_model(v, {{1.0, 0.0, 0.0}});
  const auto h = beam_search(m, kX, 3, 4);
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h[0].tokens, (std::vector<TokenId>{0, 0, 0, 0, v.eos()}));
  EXPECT_TRUE(h[0].truncated);
}

TEST(BeamSearch, RejectsZeroSizes) {
  const auto m = testing::uniform_model(testing::small_vocabulary());
  EXPECT_THROW(beam_search(m, kX, 0, 4), std::invalid_argument);
  EXPECT_THROW(beam_search(m, kX, 2, 0), std::invalid_argument);
}

}  // namespace
}  // namespace amrkit::kd
