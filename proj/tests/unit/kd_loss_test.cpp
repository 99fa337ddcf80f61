#include <gtest/gtest.h>

#include <cmath>

#include "amrkit/errors.hpp"
#include "amrkit/kd_loss.hpp"
#include "generators.hpp"
#include "models.hpp"

namespace amrkit::kd {
namespace {

using testing::LambdaModel;

const Sentence kX = {"the", "boy"};

TEST(MleLoss, UniformModel) {
  const auto m = testing::uniform_model(Vocabulary({"a", "b", "c"}));
  const std::vector<TokenId> y = {0, 1, m.vocabulary().eos()};
  EXPECT_NEAR(mle_loss(m, kX, y), 3.0 * std::log(4.0), 1e-12);
  EXPECT_NEAR(mle_loss(m, kX, y), 4.1589, 1e-4);
}

TEST(MleLoss, CertainModelIsZero) {
  const Vocabulary v({"a", "b"});
  const std::vector<TokenId> y = {1, 0, v.eos()};
  EXPECT_EQ(mle_loss(testing::deterministic_model(v, y), kX, y), 0.0);
}

TEST(MleLoss, ZeroProbabilityAndBadTarget) {
  const Vocabulary v({"a", "b"});
  const auto m = testing::deterministic_model(v, {0, v.eos()});
  EXPECT_THROW(mle_loss(m, kX, std::vector<TokenId>{1, v.eos()}), ZeroProbability);
  EXPECT_THROW(mle_loss(m, kX, std::vector<TokenId>{0}), std::invalid_argument);
}

TEST(MleLoss, TeacherForcingConsistency) {
  Rng rng(1);
  const Vocabulary v = testing::small_vocabulary(3);
  const auto m = testing::random_toy_model(rng, v, {kX}, 4);
  const std::vector<TokenId> y = {2, 0, 0, 1, v.eos()};
  double expected = 0.0;
  for (std::size_t t = 0; t < y.size(); ++t) {
    expected -= std::log(m.next_dist(std::span<const TokenId>(y).first(t), kX)[y[t]]);
  }
  EXPECT_NEAR(mle_loss(m, kX, y), expected, 1e-12);
}

TEST(KlDivergence, ClosedForm) {
  const std::vector<double> p = {0.5, 0.5}, q = {0.25, 0.75};
  EXPECT_NEAR(kl_divergence(p, q), 0.5 * std::log(2.0) + 0.5 * std::log(2.0 / 3.0), 1e-12);
  EXPECT_NEAR(kl_divergence(p, q), 0.14384, 1e-5);
  EXPECT_EQ(kl_divergence(p, p), 0.0);
  EXPECT_THROW(kl_divergence(p, std::vector<double>{1.0, 0.0}), SupportMismatch);
  // Zero student mass needs no teacher support.
  EXPECT_NO_THROW(kl_divergence(std::vector<double>{1.0, 0.0}, p));
}

TEST(TokenKd, IdentityIsZero) {
  Rng rng(2);
  const Vocabulary v = testing::small_vocabulary();
  const auto m = testing::random_toy_model(rng, v, {kX}, 4);
  EXPECT_EQ(token_kd_loss(m, m, kX, kX, std::vector<TokenId>{0, 1, v.eos()}), 0.0);
}

TEST(TokenKd, SumOfStepKls) {
  Rng rng(3);
  const Vocabulary v = testing::small_vocabulary();
  const Sentence x_star = {"der", "junge"};
  const auto s = testing::random_toy_model(rng, v, {kX}, 4);
  const auto t = testing::random_toy_model(rng, v, {x_star}, 4);
  const std::vector<TokenId> y = {1, v.eos()};
  double expected = 0.0;
  for (std::size_t step = 0; step < y.size(); ++step) {
    const auto p = s.next_dist(std::span<const TokenId>(y).first(step), kX);
    const auto q = t.next_dist(std::span<const TokenId>(y).first(step), x_star);
    for (std::size_t i = 0; i < p.size(); ++i) expected += p[i] * std::log(p[i] / q[i]);
  }
  EXPECT_NEAR(token_kd_loss(s, t, kX, x_star, y), expected, 1e-12);
  EXPECT_GT(expected, 0.0);
}

TEST(TokenKd, VocabularyMismatch) {
  const auto a = testing::uniform_model(Vocabulary({"a"}));
  const auto b = testing::uniform_model(Vocabulary({"b"}));
  EXPECT_THROW(token_kd_loss(a, b, kX, kX, std::vector<TokenId>{1}), std::invalid_argument);
}

TEST(Enumerate, ProbabilitiesSumToOne) {
  Rng rng(4);
  const Vocabulary v = testing::small_vocabulary();
  const auto m = testing::random_toy_model(rng, v, {kX}, 4);
  double total = 0.0;
  std::size_t count = 0;
  enumerate_outcomes(m, kX, 4, [&](const std::vector<TokenId>& seq, double lp) {
    EXPECT_EQ(seq.back(), v.eos());
    EXPECT_LE(seq.size(), 5u);
    total += std::exp(lp);
    ++count;
  });
  EXPECT_NEAR(total, 1.0, 1e-12);
  // 1 + 2 + 4 + 8 EOS-terminated plus 16 truncated outcomes.
  EXPECT_EQ(count, 31u);
}

TEST(Enumerate, TooLarge) {
  const auto m = testing::uniform_model(testing::small_vocabulary(9));
  EXPECT_THROW(exact_mode(m, kX, 7), TooLarge);
  EXPECT_NO_THROW(exact_mode(m, kX, 6));
}

TEST(ExactMode, DeterministicModelGivesRollout) {
  const Vocabulary v = testing::small_vocabulary();
  const std::vector<TokenId> y = {1, 0, 1, v.eos()};
  EXPECT_EQ(exact_mode(testing::deterministic_model(v, y), kX, 4), y);
}

TEST(ExactMode, UniformModelPrefersBareEos) {
  const Vocabulary v = testing::small_vocabulary();
  EXPECT_EQ(exact_mode(testing::uniform_model(v), kX, 4), std::vector<TokenId>{v.eos()});
}

TEST(ExactMode, TiesBreakByVocabularyOrder) {
  const Vocabulary v = testing::small_vocabulary();
  // a and b equally likely first, then EOS for sure.
  const auto m = testing::per_step_model(v, {{0.5, 0.5, 0.0}, {0.0, 0.0, 1.0}});
  EXPECT_EQ(exact_mode(m, kX, 4), (std::vector<TokenId>{0, v.eos()}));
}

TEST(ExactSeqKl, IdentityIsZero) {
  Rng rng(5);
  const Vocabulary v = testing::small_vocabulary();
  const auto m = testing::random_toy_model(rng, v, {kX}, 4);
  EXPECT_NEAR(exact_seq_kl(m, m, kX, kX, 4), 0.0, 1e-12);
}

TEST(ExactSeqKl, IndependentStepsSumPerStepKls) {
  const Vocabulary v = testing::small_vocabulary();
  // No EOS mass, so every outcome runs the full three steps.
  const std::vector<std::vector<double>> ps = {{0.3, 0.7, 0.0}, {0.6, 0.4, 0.0}, {0.5, 0.5, 0.0}};
  const std::vector<std::vector<double>> qs = {{0.5, 0.5, 0.0}, {0.2, 0.8, 0.0}, {0.9, 0.1, 0.0}};
  const auto s = testing::per_step_model(v, ps);
  const auto t = testing::per_step_model(v, qs);
  double expected = 0.0;
  for (int i = 0; i < 3; ++i) expected += kl_divergence(ps[i], qs[i]);
  EXPECT_NEAR(exact_seq_kl(s, t, kX, kX, 3), expected, 1e-12);
}

TEST(ExactSeqKl, NonNegativeOnFuzzedPairs) {
  Rng rng(6);
  const Vocabulary v = testing::small_vocabulary();
  for (int i = 0; i < 100; ++i) {
    const auto s = testing::random_toy_model(rng, v, {kX}, 4);
    const auto t = testing::random_toy_model(rng, v, {kX}, 4);
    EXPECT_GE(exact_seq_kl(s, t, kX, kX, 4), 0.0);
    EXPECT_GE(token_kd_loss(s, t, kX, kX, std::vector<TokenId>{0, 1, v.eos()}), 0.0);
  }
}

TEST(RanksBefore, Order) {
  EXPECT_TRUE(ranks_before(-1.0, {1}, -2.0, {0}));
  EXPECT_TRUE(ranks_before(-1.0, {0, 2}, -1.0, {1, 2}));
  EXPECT_TRUE(ranks_before(-1.0, {0}, -1.0, {0, 2}));
  EXPECT_FALSE(ranks_before(-1.0, {0}, -1.0, {0}));
}

}  // namespace
}  // namespace amrkit::kd
