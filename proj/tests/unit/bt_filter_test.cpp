#include <gtest/gtest.h>

#include "amrkit/bt_filter.hpp"
#include "amrkit/random.hpp"

namespace amrkit {
namespace {

// Embeds "vN" as the N-th fixed vector; anything else fails.
class TableEmbedder : public EmbeddingProvider {
 public:
  explicit TableEmbedder(std::vector<Embedding> table) : table_(std::move(table)) {}
  std::vector<std::optional<Embedding>> embed(std::span<const std::string> s,
                                              Lang) const override {
    std::vector<std::optional<Embedding>> out;
    for (const auto& x : s) {
      if (x.size() > 1 && x[0] == 'v') out.emplace_back(table_.at(std::stoul(x.substr(1))));
      else out.emplace_back(std::nullopt);
    }
    return out;
  }

 private:
  std::vector<Embedding> table_;
};

// Back-translation maps "t:vN" to "vN".
class PrefixTranslator : public Translator {
 public:
  std::vector<std::optional<std::string>> translate(std::span<const std::string> s, Lang,
                                                    Lang) const override {
    std::vector<std::optional<std::string>> out;
    for (const auto& x : s) {
      if (x.rfind("t:", 0) == 0) out.emplace_back(x.substr(2));
      else out.emplace_back(std::nullopt);
    }
    return out;
  }
};

CorpusRecord translated(std::string id, std::string en, std::string src) {
  CorpusRecord r;
  r.id = std::move(id);
  r.lang = Lang::kDE;
  r.src = std::move(src);
  r.provenance = Provenance::kSilverMt;
  r.meta["en"] = std::move(en);
  return r;
}

TEST(BtFilter, IdenticalVectorsScoreOne) {
  TableEmbedder emb(std::vector<Embedding>{{1.0, 2.0, 3.0}});
  const std::vector<CorpusRecord> in = {translated("a", "v0", "t:v0")};
  const auto r = bt_filter(in, emb, PrefixTranslator(), 0.99);
  ASSERT_EQ(r.kept.size(), 1u);
  EXPECT_NEAR(*r.kept[0].quality, 1.0, 1e-12);
  EXPECT_EQ(r.kept[0].meta.at("bt"), "v0");
}

TEST(BtFilter, OrthogonalDroppedAtHalf) {
  TableEmbedder emb(std::vector<Embedding>{{1.0, 0.0}, {0.0, 1.0}});
  const std::vector<CorpusRecord> in = {translated("a", "v0", "t:v1")};
  const auto r = bt_filter(in, emb, PrefixTranslator(), 0.5);
  EXPECT_TRUE(r.kept.empty());
  ASSERT_EQ(r.dropped.size(), 1u);
  EXPECT_NEAR(*r.dropped[0].quality, 0.0, 1e-12);
}

TEST(BtFilter, FailuresDroppedWithReason) {
  TableEmbedder emb(std::vector<Embedding>{{1.0}});
  CorpusRecord english = translated("en", "v0", "t:v0");
  english.lang = Lang::kEN;
  CorpusRecord no_meta = translated("nm", "v0", "t:v0");
  no_meta.meta.clear();
  const std::vector<CorpusRecord> in = {english, no_meta, translated("bt", "v0", "broken"),
                                        translated("emb", "x", "t:v0"),
                                        translated("ok", "v0", "t:v0")};
  const auto r = bt_filter(in, emb, PrefixTranslator(), 0.5);
  ASSERT_EQ(r.kept.size(), 1u);
  EXPECT_EQ(r.kept[0].id, "ok");
  ASSERT_EQ(r.dropped.size(), 4u);
  for (const auto& d : r.dropped) {
    EXPECT_FALSE(d.quality.has_value()) << d.id;
    EXPECT_TRUE(d.meta.contains("filter_error")) << d.id;
  }
}

TEST(BtFilter, PartitionAndMonotonicity) {
  Rng rng(11);
  std::vector<CorpusRecord> scored;
  for (int i = 0; i < 200; ++i) {
    CorpusRecord r = translated(std::to_string(i), "e", "s");
    r.quality = uniform_real(rng) * 2.0 - 1.0;
    scored.push_back(r);
  }
  std::size_t prev = scored.size() + 1;
  for (double t = -1.0; t <= 1.0; t += 0.05) {
    const auto r = apply_threshold(scored, t);
    EXPECT_EQ(r.kept.size() + r.dropped.size(), scored.size());
    EXPECT_LE(r.kept.size(), prev);
    prev = r.kept.size();
    for (const auto& k : r.kept) EXPECT_GE(*k.quality, t);
    for (const auto& d : r.dropped) EXPECT_LT(*d.quality, t);
  }
}

TEST(BtFilter, KeepsInputOrder) {
  TableEmbedder emb(std::vector<Embedding>{{1.0, 0.0}, {0.0, 1.0}});
  std::vector<CorpusRecord> in;
  for (int i = 0; i < 6; ++i) {
    in.push_back(translated(std::to_string(i), "v0", i % 2 ? "t:v1" : "t:v0"));
    if (i == 3) in.back().lang = Lang::kZH;
  }
  const auto r = bt_filter(in, emb, PrefixTranslator(), 0.5);
  ASSERT_EQ(r.kept.size(), 3u);
  EXPECT_EQ(r.kept[0].id, "0");
  EXPECT_EQ(r.kept[1].id, "2");
  EXPECT_EQ(r.kept[2].id, "4");
  EXPECT_EQ(r.dropped[1].id, "3");
}

}  // namespace
}  // namespace amrkit
