#include <gtest/gtest.h>

#include <algorithm>

#include "amrkit/noise.hpp"
#include "amrkit/random.hpp"
#include "amrkit/seq_model.hpp"

namespace amrkit {
namespace {

const std::string kTen = "one two three four five six seven eight nine ten";

std::size_t masks(const std::string& s) {
  const auto words = kd::split_words(s);
  return static_cast<std::size_t>(std::count(words.begin(), words.end(), kMaskToken));
}

TEST(WordDelete, RateZeroIsIdentity) {
  EXPECT_EQ(word_delete(kTen, 0.0, 1), kTen);
  EXPECT_EQ(word_delete("  spaced   out ", 0.0, 1), "spaced out");
}

TEST(WordDelete, TenWordsAtTwentyPercent) {
  const auto out = word_delete(kTen, 0.2, 42);
  EXPECT_EQ(masks(out), 2u);
  EXPECT_EQ(kd::split_words(out).size(), 10u);
}

TEST(WordDelete, CountsAtTunedRates) {
  for (double rate : {0.10, 0.15, 0.20, 0.25, 0.30}) {
    for (std::size_t n = 0; n <= 40; ++n) {
      std::string s;
      for (std::size_t i = 0; i < n; ++i) s += "w" + std::to_string(i) + " ";
      EXPECT_EQ(masks(word_delete(s, rate, n)), masked_count(n, rate)) << rate << " " << n;
    }
  }
}

TEST(WordDelete, RoundsHalfAwayFromZero) {
  EXPECT_EQ(masked_count(10, 0.15), 2u);  // 1.5
  EXPECT_EQ(masked_count(10, 0.25), 3u);  // 2.5
  EXPECT_EQ(masked_count(2, 0.25), 1u);   // 0.5
  EXPECT_EQ(masked_count(3, 0.10), 0u);
  EXPECT_EQ(masked_count(7, 1.0), 7u);
}

TEST(WordDelete, DeterministicPerSeed) {
  EXPECT_EQ(word_delete(kTen, 0.3, 9), word_delete(kTen, 0.3, 9));
  bool differs = false;
  for (std::uint64_t s = 0; s < 20 && !differs; ++s) {
    differs = word_delete(kTen, 0.3, s) != word_delete(kTen, 0.3, s + 100);
  }
  EXPECT_TRUE(differs);
}

TEST(WordDelete, KeepsUnmaskedWordsInPlace) {
  const auto in = kd::split_words(kTen);
  const auto out = kd::split_words(word_delete(kTen, 0.5, 3));
  ASSERT_EQ(in.size(), out.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (out[i] != kMaskToken) EXPECT_EQ(out[i], in[i]);
  }
}

TEST(NoiseSpec, ParseAndDescribe) {
  EXPECT_EQ(NoiseSpec::parse("none").kind, NoiseKind::kNone);
  EXPECT_EQ(NoiseSpec::parse("mt").kind, NoiseKind::kMtAdapter);
  const auto d = NoiseSpec::parse("delete:15");
  EXPECT_EQ(d.kind, NoiseKind::kWordDelete);
  EXPECT_DOUBLE_EQ(d.rate, 0.15);
  EXPECT_EQ(d.describe(), "delete:15");
  EXPECT_THROW(NoiseSpec::parse("delete:"), std::invalid_argument);
  EXPECT_THROW(NoiseSpec::parse("delete:120"), std::invalid_argument);
  EXPECT_THROW(NoiseSpec::parse("bart"), std::invalid_argument);
}

TEST(NoiseSpec, ValidateRequirements) {
  auto d = NoiseSpec::parse("delete:10");
  EXPECT_THROW(d.validate(), std::invalid_argument);  // no seed
  d.seed = 1;
  EXPECT_NO_THROW(d.validate());
  auto mt = NoiseSpec::parse("mt");
  EXPECT_THROW(mt.validate(), std::invalid_argument);  // no adapter
  mt.adapter = std::make_shared<StubTranslator>();
  EXPECT_NO_THROW(mt.validate());
}

TEST(ApplyNoise, IndependentOfBatching) {
  auto spec = NoiseSpec::parse("delete:20");
  spec.seed = 5;
  const std::vector<std::string> all = {kTen, "a b c d e", kTen};
  const auto full = apply_noise(spec, all);
  EXPECT_EQ(*full[0], word_delete(kTen, 0.2, derive_seed(5, 0)));
  EXPECT_EQ(*full[2], word_delete(kTen, 0.2, derive_seed(5, 2)));
}

TEST(ApplyNoise, ResampleChangesWithEpoch) {
  auto spec = NoiseSpec::parse("delete:30");
  spec.seed = 5;
  const std::vector<std::string> all(8, kTen);
  EXPECT_EQ(apply_noise(spec, all, 0), apply_noise(spec, all, 3));
  spec.resample_per_epoch = true;
  EXPECT_NE(apply_noise(spec, all, 0), apply_noise(spec, all, 3));
}

TEST(ApplyNoise, MtUsesAdapter) {
  auto spec = NoiseSpec::parse("mt");
  spec.target = Lang::kES;
  spec.adapter = std::make_shared<StubTranslator>(0);
  const std::vector<std::string> in = {"the house", ""};
  const auto out = apply_noise(spec, in);
  EXPECT_EQ(*out[0], "es_the es_house");
  EXPECT_FALSE(out[1].has_value());
}

}  // namespace
}  // namespace amrkit
