#include <gtest/gtest.h>

#include "amrkit/corpus_stats.hpp"
#include "json.hpp"

namespace amrkit {
namespace {

CorpusStats release_counts() {
  CorpusStats s;
  s.set(Lang::kEN, Split::kTrain, 36521, true);
  s.set(Lang::kEN, Split::kDev, 1368, true);
  s.set(Lang::kDE, Split::kTrain, 34415, false);
  s.set(Lang::kDE, Split::kDev, 1319, false);
  s.set(Lang::kES, Split::kTrain, 34552, false);
  s.set(Lang::kES, Split::kDev, 1325, false);
  s.set(Lang::kIT, Split::kTrain, 34521, false);
  s.set(Lang::kIT, Split::kDev, 1322, false);
  s.set(Lang::kZH, Split::kTrain, 33221, false);
  s.set(Lang::kZH, Split::kDev, 1311, false);
  for (Lang l : kAllLangs) s.set(l, Split::kTest, 1371, true);
  return s;
}

TEST(CorpusStats, ReleaseLayout) {
  const auto t = release_counts().render_table();
  EXPECT_NE(t.find("English(EN)"), std::string::npos);
  EXPECT_NE(t.find("36,521*"), std::string::npos);
  EXPECT_NE(t.find("34,415 "), std::string::npos);
  EXPECT_EQ(t.find("34,415*"), std::string::npos);
  EXPECT_NE(t.find("1,311 "), std::string::npos);
  EXPECT_NE(t.find("1,371*"), std::string::npos);
  EXPECT_NE(t.find("Chinese(ZH)"), std::string::npos);
}

TEST(CorpusStats, Json) {
  const auto j = nlohmann::json::parse(release_counts().to_json());
  EXPECT_EQ(j["EN"]["train"]["count"], 36521);
  EXPECT_EQ(j["EN"]["train"]["gold"], true);
  EXPECT_EQ(j["ZH"]["dev"]["count"], 1311);
  EXPECT_EQ(j["ZH"]["dev"]["gold"], false);
}

TEST(CorpusStats, CountsRecords) {
  CorpusRecord g;
  g.src = "s";
  g.tgt = LinearSeq::parse("( <V0> a )");
  CorpusRecord silver = g;
  silver.lang = Lang::kDE;
  silver.provenance = Provenance::kSilverMt;
  const auto s = corpus_stats(std::vector<CorpusRecord>{g, g, silver});
  EXPECT_EQ(s.cell(Lang::kEN, Split::kTrain).count, 2u);
  EXPECT_TRUE(s.cell(Lang::kEN, Split::kTrain).gold);
  EXPECT_EQ(s.cell(Lang::kDE, Split::kTrain).count, 1u);
  EXPECT_FALSE(s.cell(Lang::kDE, Split::kTrain).gold);
  EXPECT_EQ(s.total(), 3u);
}

TEST(CorpusStats, MixedCellIsNotGold) {
  CorpusRecord g;
  g.src = "s";
  g.split = Split::kTest;
  CorpusRecord kd = g;
  kd.provenance = Provenance::kSeqKd;
  const auto s = corpus_stats(std::vector<CorpusRecord>{g, kd});
  EXPECT_FALSE(s.cell(Lang::kEN, Split::kTest).gold);
}

TEST(CorpusStats, Empty) {
  const auto s = corpus_stats({});
  EXPECT_EQ(s.total(), 0u);
  EXPECT_NE(s.render_table().find("German(DE)"), std::string::npos);
}

TEST(CorpusStats, Thousands) {
  EXPECT_EQ(with_thousands(0), "0");
  EXPECT_EQ(with_thousands(999), "999");
  EXPECT_EQ(with_thousands(1000), "1,000");
  EXPECT_EQ(with_thousands(1234567), "1,234,567");
}

}  // namespace
}  // namespace amrkit
