#include <gtest/gtest.h>

#include <sstream>

#include "amrkit/corpus.hpp"
#include "amrkit/errors.hpp"

namespace amrkit {
namespace {

CorpusRecord gold() {
  CorpusRecord r;
  r.id = "g1";
  r.src = "The boy wants to go.";
  r.tgt = LinearSeq::parse("( <V0> want-01 :ARG0 ( <V1> boy ) )");
  return r;
}

TEST(Corpus, JsonlRoundTrip) {
  CorpusRecord silver;
  silver.id = "s1";
  silver.lang = Lang::kZH;
  silver.split = Split::kDev;
  silver.src = "男孩 想 去";
  silver.tgt = LinearSeq::parse("( <V0> name :op1 \"Two Words\" )");
  silver.provenance = Provenance::kSilverMt;
  silver.quality = 0.9123456789;
  silver.meta = {{"en", "The boy wants to go."}};
  CorpusRecord untargeted;
  untargeted.id = "u";
  untargeted.lang = Lang::kDE;
  untargeted.split = Split::kTest;
  untargeted.src = "x";
  untargeted.provenance = Provenance::kSilverMt;

  const std::vector<CorpusRecord> in = {gold(), silver, untargeted};
  std::stringstream ss;
  write_jsonl(ss, in);
  EXPECT_EQ(read_jsonl(ss), in);
}

TEST(Corpus, LineFormat) {
  const auto line = to_jsonl_line(gold());
  EXPECT_EQ(line.find('\n'), std::string::npos);
  EXPECT_NE(line.find("\"lang\":\"EN\""), std::string::npos);
  EXPECT_NE(line.find("\"provenance\":\"gold\""), std::string::npos);
  EXPECT_NE(line.find("\"quality\":null"), std::string::npos);
}

TEST(Corpus, ValidateInvariants) {
  EXPECT_NO_THROW(validate_record(gold()));
  auto r = gold();
  r.lang = Lang::kDE;
  EXPECT_THROW(validate_record(r), FormatError);
  r = gold();
  r.tgt.reset();
  EXPECT_THROW(validate_record(r), FormatError);
  r = gold();
  r.quality = 1.5;
  EXPECT_THROW(validate_record(r), FormatError);
  r = gold();
  r.split = Split::kTest;
  r.lang = Lang::kDE;  // gold test sets exist for every language
  EXPECT_NO_THROW(validate_record(r));
}

TEST(Corpus, RejectsMalformedLines) {
  EXPECT_THROW(from_jsonl_line("{"), FormatError);
  EXPECT_THROW(from_jsonl_line("[]"), FormatError);
  EXPECT_THROW(from_jsonl_line(R"({"id":"a","lang":"XX","split":"train","src":"s","tgt":null,)"
                               R"("provenance":"silver-mt","quality":null,"meta":{}})"),
               FormatError);
  EXPECT_THROW(from_jsonl_line(R"({"id":"a","lang":"DE","split":"train","src":"s","tgt":null,)"
                               R"("provenance":"gold","quality":null,"meta":{}})"),
               FormatError);
}

TEST(Corpus, NamesRoundTrip) {
  for (Split s : {Split::kTrain, Split::kDev, Split::kTest}) EXPECT_EQ(parse_split(split_name(s)), s);
  for (Provenance p : {Provenance::kGold, Provenance::kSilverMt, Provenance::kSeqKd}) {
    EXPECT_EQ(parse_provenance(provenance_name(p)), p);
  }
  EXPECT_FALSE(parse_split("training").has_value());
}

}  // namespace
}  // namespace amrkit
