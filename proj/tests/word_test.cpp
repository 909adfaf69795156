#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wordrep/error.hpp"
#include "wordrep/graph_io.hpp"
#include "wordrep/word.hpp"

namespace wordrep {
namespace {

Word W(const char* s) { return Word::parse(s); }

TEST(WordTest, AlphabetAndCounts) {
  Word w = W("banana");
  EXPECT_EQ(w.alphabet(), (std::vector<Letter>{"a", "b", "n"}));
  EXPECT_EQ(w.count("a"), 3u);
  EXPECT_EQ(w.count("n"), 2u);
  EXPECT_EQ(w.count("z"), 0u);
  EXPECT_TRUE(Word().alphabet().empty());
}

TEST(WordTest, ParsesUtf8ScalarsAndTokens) {
  Word w = W("αβα");
  EXPECT_EQ(w.size(), 3u);
  EXPECT_EQ(w.alphabet().size(), 2u);
  EXPECT_EQ(w.str(), "αβα");

  Word t = Word::parse("  v10 v2\tv10 ", WordMode::Tokens);
  EXPECT_EQ(t.letters(), (std::vector<Letter>{"v10", "v2", "v10"}));
  EXPECT_EQ(t.str(), "v10 v2 v10");
}

TEST(WordTest, RejectsMalformedUtf8) {
  EXPECT_THROW(Word::parse("a\xff"), ParseError);
  EXPECT_THROW(Word::parse("\xc3"), ParseError);
  try {
    Word::parse("ab\x80");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(ProjectTest, Examples) {
  EXPECT_EQ(project(W("pepper"), {"p", "e"}).str(), "peppe");
  EXPECT_EQ(project(W("banana"), {"a", "n"}).str(), "anana");
  Word empty = project(W("analog"), {"x", "y"});
  EXPECT_TRUE(empty.empty());
  EXPECT_TRUE(empty.alphabet().empty());
}

TEST(AlternatesTest, Examples) {
  EXPECT_TRUE(alternates(W("analog"), "a", "n"));
  EXPECT_FALSE(alternates(W("balloon"), "l", "o"));
  EXPECT_TRUE(alternates(W("ab"), "a", "b"));
}

TEST(AlternatesTest, Errors) {
  EXPECT_THROW(alternates(W("ab"), "a", "a"), InvalidArgument);
  EXPECT_THROW(alternates(W("ab"), "a", "z"), InvalidArgument);
}

TEST(GraphOfWordTest, Analog) {
  Graph g = graph_of_word(W("analog"));
  EXPECT_EQ(g.nodes(), (std::vector<NodeId>{"a", "g", "l", "n", "o"}));
  std::vector<Edge> expected = {{"a", "n"}, {"g", "l"}, {"g", "n"}, {"g", "o"},
                                {"l", "n"}, {"l", "o"}, {"n", "o"}};
  EXPECT_EQ(g.edges(), expected);
}

TEST(GraphOfWordTest, Balloon) {
  Graph g = graph_of_word(W("balloon"));
  EXPECT_EQ(g.nodes().size(), 5u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{"a", "b"}, {"a", "n"}, {"b", "n"}}));
}

TEST(GraphOfWordTest, SingleLetterAndEmpty) {
  Graph g = graph_of_word(W("a"));
  EXPECT_EQ(g.nodes(), (std::vector<NodeId>{"a"}));
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_EQ(graph_of_word(Word()).size(), 0u);
}

// Alternation and the represented graph against the literal (ab)^n shapes,
// for every word of length <= 7 over 3 letters.
TEST(GraphOfWordProperty, MatchesDefinitionExhaustively) {
  for (std::size_t len = 0; len <= 7; ++len) {
    for (const auto& letters : oracle::all_words(3, len)) {
      Word w(letters);
      ASSERT_EQ(graph_of_word(w), oracle::graph_of_word(letters)) << w.str();
      for (const auto& a : w.alphabet())
        for (const auto& b : w.alphabet())
          if (a != b) ASSERT_EQ(alternates(w, a, b), alternates(w, b, a));
    }
  }
}

TEST(GraphOfWordProperty, ProjectionInducesSubgraph) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    Word w(oracle::random_word(rng, 5, 1 + trial % 12));
    const Graph g = graph_of_word(w);
    const auto& alph = w.alphabet();
    for (unsigned mask = 0; mask < (1u << alph.size()); ++mask) {
      std::set<Letter> keep;
      std::vector<NodeId> subset;
      for (std::size_t i = 0; i < alph.size(); ++i) {
        if (mask & (1u << i)) {
          keep.insert(alph[i]);
          subset.push_back(alph[i]);
        }
      }
      keep.insert("z");  // letters outside the alphabet are ignored
      ASSERT_EQ(graph_of_word(project(w, keep)), induced_subgraph(g, subset));
    }
  }
}

TEST(GraphOfWordProperty, RepeatedFactorBreaksAlternation) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    Word w(oracle::random_word(rng, 3, 2 + trial % 9));
    for (const auto& a : w.alphabet()) {
      for (const auto& b : w.alphabet()) {
        if (a == b) continue;
        const auto p = project(w, {a, b}).letters();
        bool repeat = false;
        for (std::size_t i = 1; i < p.size(); ++i) repeat = repeat || p[i] == p[i - 1];
        ASSERT_EQ(alternates(w, a, b), !repeat);
      }
    }
  }
}

TEST(GraphTest, RejectsInvalidGraphs) {
  EXPECT_THROW(Graph({"a", "a"}, {}), InvalidArgument);
  EXPECT_THROW(Graph({"a"}, {{"a", "a"}}), InvalidArgument);
  EXPECT_THROW(Graph({"a"}, {{"a", "b"}}), InvalidArgument);
  EXPECT_THROW(induced_subgraph(Graph({"a"}, {}), {"b"}), InvalidArgument);
}

TEST(GraphIoTest, JsonIsCanonical) {
  Graph g({"b", "a", "c"}, {{"c", "a"}, {"b", "a"}});
  EXPECT_EQ(graph_to_json(g), R"({"edges":[["a","b"],["a","c"]],"nodes":["a","b","c"]})");
  EXPECT_EQ(graph_from_json(graph_to_json(g)), g);
  EXPECT_EQ(graph_from_json(R"({"nodes":[1,2],"edges":[[2,1]]})"), Graph({"1", "2"}, {{"1", "2"}}));
}

TEST(GraphIoTest, EdgeListWithIsolatedNodes) {
  Graph g = read_graph("# comment\nnode x\na b\n\nb c\n");
  EXPECT_EQ(g, Graph({"a", "b", "c", "x"}, {{"a", "b"}, {"b", "c"}}));
  EXPECT_EQ(read_graph(graph_to_edge_list(g)), g);
}

TEST(GraphIoTest, MalformedInput) {
  EXPECT_THROW(graph_from_json("{\"nodes\": [\"a\""), ParseError);
  EXPECT_THROW(graph_from_edge_list("a b c\n"), ParseError);
  EXPECT_THROW(graph_from_json(R"({"nodes":["a"],"edges":[["a","b"]]})"), InvalidArgument);
}

}  // namespace
}  // namespace wordrep
