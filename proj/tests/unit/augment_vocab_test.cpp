#include <gtest/gtest.h>

#include <algorithm>

#include "amrkit/augment_vocab.hpp"

namespace amrkit {
namespace {

CorpusRecord with_target(const std::string& lin) {
  CorpusRecord r;
  r.src = "s";
  r.tgt = LinearSeq::parse(lin);
  return r;
}

std::vector<CorpusRecord> repeat(const std::string& lin, int n) {
  return std::vector<CorpusRecord>(n, with_target(lin));
}

bool has(const std::vector<std::string>& v, const std::string& t) {
  return std::find(v.begin(), v.end(), t) != v.end();
}

TEST(AugmentVocab, FrequentInRareOut) {
  auto gold = repeat("( <V0> go-01 :ARG0 ( <V1> boy ) )", 7);
  const auto rare = repeat("( <V0> go-01 :ARG9 ( <V1> girl ) )", 2);
  gold.insert(gold.end(), rare.begin(), rare.end());
  const auto v = augment_vocab(gold);
  EXPECT_TRUE(has(v, ":ARG0"));
  EXPECT_FALSE(has(v, ":ARG9"));
  EXPECT_TRUE(has(v, "go-01"));
  EXPECT_FALSE(has(v, "boy"));  // not a frame
}

TEST(AugmentVocab, BoundaryAtFive) {
  auto gold = repeat("( <V0> a-01 :mod ( <V1> x ) )", 5);
  const auto four = repeat("( <V0> b-01 :poss ( <V1> x ) )", 4);
  gold.insert(gold.end(), four.begin(), four.end());
  const auto v = augment_vocab(gold);
  EXPECT_TRUE(has(v, ":mod"));
  EXPECT_TRUE(has(v, "a-01"));
  EXPECT_FALSE(has(v, ":poss"));
  EXPECT_FALSE(has(v, "b-01"));
  EXPECT_TRUE(has(augment_vocab(gold, 4), ":poss"));
}

TEST(AugmentVocab, FramesOnlyInConceptPosition) {
  const auto v = augment_vocab(repeat("( <V0> x :mod \"see-01\" )", 6), 1);
  EXPECT_FALSE(has(v, "see-01"));
  EXPECT_TRUE(has(v, ":mod"));
}

TEST(AugmentVocab, EmptyInput) {
  EXPECT_TRUE(augment_vocab({}).empty());
}

TEST(AugmentVocab, SortedByCountThenName) {
  auto gold = repeat("( <V0> z-01 :b ( <V1> q ) :a ( <V2> q ) )", 5);
  const auto more = repeat("( <V0> q :c ( <V1> q ) )", 6);
  gold.insert(gold.end(), more.begin(), more.end());
  EXPECT_EQ(augment_vocab(gold), (std::vector<std::string>{":c", ":a", ":b", "z-01"}));
}

TEST(AugmentVocab, FrameNames) {
  EXPECT_TRUE(is_frame_name("want-01"));
  EXPECT_TRUE(is_frame_name("have-org-role-91"));
  EXPECT_FALSE(is_frame_name("boy"));
  EXPECT_FALSE(is_frame_name("-01"));
  EXPECT_FALSE(is_frame_name("want-1"));
}

}  // namespace
}  // namespace amrkit
