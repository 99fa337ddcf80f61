#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "amrkit/errors.hpp"
#include "amrkit/penman.hpp"
#include "amrkit/smatch.hpp"
#include "generators.hpp"

namespace amrkit {
namespace {

TEST(Penman, ParsesWantBoy) {
  const AmrGraph g = parse_penman("(w / want-01 :ARG0 (b / boy))");
  EXPECT_EQ(g.root(), "w");
  ASSERT_EQ(g.nodes().size(), 2u);
  EXPECT_EQ(g.node("w").label, "want-01");
  EXPECT_EQ(g.node("b").label, "boy");
  ASSERT_EQ(g.edges().size(), 1u);
  EXPECT_EQ(g.edges()[0], (Edge{"w", ":ARG0", "b"}));
}

TEST(Penman, SingleNode) {
  const AmrGraph g = parse_penman("(c / cat)");
  EXPECT_EQ(g.root(), "c");
  EXPECT_EQ(g.nodes().size(), 1u);
  EXPECT_TRUE(g.edges().empty());
}

TEST(Penman, RejectsMalformed) {
  for (const char* bad : {
           "(w / want-01 :ARG0 (b / boy",     // unbalanced
           "(w / want-01 :ARG0 (b / boy)))",  // extra close
           "(w / )",                          // missing concept
           "(w want-01)",                     // missing slash
           "(w / want-01 :ARG0)",             // role without value
           "(w / want-01 :ARG0 (w / boy))",   // duplicate variable
           "(w / want-01 :ARG0 b :ARG1 (b / boy))",  // reference before definition
           "(c / cat) (d / dog)",             // trailing expression
           "",
       }) {
    EXPECT_THROW(parse_penman(bad), MalformedPenman) << bad;
  }
}

TEST(Penman, AcceptsIndentationAndSlashSpacing) {
  const AmrGraph a = parse_penman("(w / want-01\n   :ARG0 (b / boy))");
  const AmrGraph b = parse_penman("(w/want-01 :ARG0 (b /boy))");
  EXPECT_EQ(serialize_penman(a), serialize_penman(b));
}

TEST(Penman, Reentrancy) {
  const AmrGraph g = parse_penman("(w / want-01 :ARG0 (b / boy) :ARG1 (g / go-02 :ARG0 b))");
  EXPECT_EQ(g.nodes().size(), 3u);
  ASSERT_EQ(g.edges().size(), 3u);
  const auto& e = g.edges();
  EXPECT_NE(std::find(e.begin(), e.end(), Edge{"g", ":ARG0", "b"}), e.end());
}

TEST(Penman, ConstantsAndQuotedStrings) {
  const AmrGraph g = parse_penman(R"x((c / city :name (n / name :op1 "New York (City)")))x");
  EXPECT_EQ(serialize_penman(g), R"x((c / city :name (n / name :op1 "New York (City)")))x");
}

TEST(Penman, SerializeExamples) {
  EXPECT_EQ(serialize_penman(parse_penman("(w / want-01 :ARG0 (b / boy))")),
            "(w / want-01 :ARG0 (b / boy))");
  EXPECT_EQ(serialize_penman(parse_penman("(c / cat)")), "(c / cat)");

  GraphBuilder b;
  b.add_variable("w", "want-01");
  b.add_variable("b", "boy");
  b.add_variable("g", "go-02");
  b.add_edge("w", ":ARG0", "b");
  b.add_edge("w", ":ARG1", "g");
  b.add_edge("g", ":ARG0", "b");
  EXPECT_EQ(serialize_penman(std::move(b).build("w")),
            "(w / want-01 :ARG0 (b / boy) :ARG1 (g / go-02 :ARG0 b))");
}

TEST(Penman, MetadataRoundTripsVerbatim) {
  const std::string text = "# ::id x.1 ::date 2021\n# ::snt Hi .\n(h / hi)";
  const AmrGraph g = parse_penman(text);
  EXPECT_EQ(g.metadata().get("snt"), "Hi .");
  EXPECT_EQ(serialize_penman(g), text);
}

TEST(Penman, ReadsReleaseBlocks) {
  std::istringstream in(
      "# AMR release; corpus header\n\n"
      "# ::id a\n(c / cat)\n\n\n"
      "# ::id b\n(w / want-01\n  :ARG0 (b / boy))\n");
  const auto graphs = read_amr_file(in);
  ASSERT_EQ(graphs.size(), 2u);
  EXPECT_EQ(graphs[1].metadata().get("id"), "b");
  std::ostringstream out;
  write_amr_file(out, graphs);
  std::istringstream again(out.str());
  EXPECT_EQ(read_amr_file(again).size(), 2u);
}

TEST(Penman, RoundTripIsomorphicOnGeneratedGraphs) {
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const AmrGraph g = testing::random_graph(rng);
    const std::string text = serialize_penman(g);
    const AmrGraph back = parse_penman(text);
    EXPECT_EQ(smatch_exact(back, g, 12).f1, 1.0) << text;
    // Serialization is a fixed point after one round.
    EXPECT_EQ(serialize_penman(back), text);
  }
}

}  // namespace
}  // namespace amrkit
