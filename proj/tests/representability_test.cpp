#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wordrep/error.hpp"
#include "wordrep/graph_io.hpp"
#include "wordrep/representability.hpp"

namespace wordrep {
namespace {

Word W(const char* s) { return Word::parse(s); }
MarkingSequence S(const char* s) { return MarkingSequence::parse(s); }

MembershipResult decide(const Graph& g, GraphClass kind, std::size_t k, SearchBudget budget = {}) {
  return decide_membership({g, kind, k, budget});
}

std::size_t max_count(const Word& w) {
  std::size_t m = 0;
  for (const auto& a : w.alphabet()) m = std::max(m, w.count(a));
  return m;
}

TEST(OversizedTest, Examples) {
  EXPECT_EQ(oversized_letters(W("abaaa"), 1), (std::set<Letter>{"a"}));
  EXPECT_EQ(oversized_letters(W("abaaa"), 1, S("b,a")), (std::set<Letter>{"a"}));
  EXPECT_TRUE(oversized_letters(W("pepper"), 2).empty());
  EXPECT_THROW(oversized_letters(W("abab"), 1), InvalidArgument);
  EXPECT_THROW(oversized_letters(W("pepper"), 2, S("r,p,e")), InvalidArgument);
}

TEST(UniformizeTest, Examples) {
  auto r = uniformize(W("abaaa"), 1, S("b,a"));
  EXPECT_EQ(r.word.str(), "aab");
  EXPECT_EQ(r.sequence, S("b,a"));
  auto s = uniformize(W("aaaa"), 1, S("a"));
  EXPECT_EQ(s.word.str(), "aa");
  auto p = uniformize(W("pepper"), 2, S("p,e,r"));
  EXPECT_EQ(p.word, W("pepper"));
  EXPECT_EQ(p.sequence, S("p,e,r"));
  EXPECT_THROW(uniformize(W("pepper"), 1, S("p,e,r")), InvalidArgument);
}

TEST(UniformizeProperty, RandomRoundTrip) {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    auto letters = oracle::random_word(rng, 1 + trial % 4, 1 + trial % 12);
    Word w(letters);
    auto r = locality(w);
    for (std::size_t k = r.k; k <= 3; ++k) {
      auto u = uniformize(w, k, r.witness);
      ASSERT_EQ(oracle::max_blocks(u.word.letters(), u.sequence.order()) <= k, true) << w.str();
      ASSERT_LE(max_count(u.word), k + 1) << w.str();
      ASSERT_EQ(oracle::graph_of_word(u.word.letters()), oracle::graph_of_word(letters)) << w.str();
      ASSERT_EQ(u.word.alphabet(), w.alphabet());
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000);
}

// Letters with more than k+1 occurrences in a k-local word alternate with
// nothing, over all words of length <= 7 on 3 letters.
TEST(OversizedProperty, NoAlternation) {
  for (std::size_t len = 1; len <= 7; ++len) {
    for (const auto& letters : oracle::all_words(3, len)) {
      const auto k = oracle::locality(letters).first;
      const auto edges = oracle::edges_of_word(letters);
      for (const auto& a : oracle::alphabet(letters)) {
        if (static_cast<std::size_t>(std::count(letters.begin(), letters.end(), a)) <= k + 1) continue;
        for (const auto& [x, y] : edges) ASSERT_TRUE(x != a && y != a);
      }
    }
  }
}

TEST(CliquePartitionWordTest, Examples) {
  auto r = represent_clique_partition(CliquePartition::parse("ab|cd"));
  EXPECT_EQ(r.word.str(), "abcdcdab");
  EXPECT_EQ(r.sequence, S("c,d,b,a"));
  EXPECT_TRUE(is_k_local_with(r.word, r.sequence, 2));
  auto single = represent_clique_partition(CliquePartition::parse("abc"));
  EXPECT_EQ(single.word.str(), "abcabc");
  EXPECT_EQ(single.sequence, S("a,b,c"));
  auto three = represent_clique_partition(CliquePartition::parse("ab|c|de"));
  EXPECT_EQ(three.word.str(), "abcdedecab");
  EXPECT_TRUE(is_k_local_with(three.word, three.sequence, 2));
}

TEST(CliquePartitionWordProperty, AllPartitionsUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& p : set_partitions(n)) {
      auto r = represent_clique_partition(p);
      ASSERT_TRUE(oracle::max_blocks(r.word.letters(), r.sequence.order()) <= 2) << p.str();
      ASSERT_EQ(oracle::graph_of_word(r.word.letters()), clique_partition_graph(p)) << p.str();
      ASSERT_LE(max_count(r.word), 2u);
    }
  }
}

TEST(DecideTest, CompleteGraphsAreOneRepresentable) {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto r = decide(complete_graph(n), GraphClass::R, 1);
    ASSERT_EQ(r.verdict, Verdict::Member);
    std::string expected;
    for (std::size_t i = 1; i <= n; ++i) expected += std::to_string(i);
    EXPECT_EQ(r.witness->str(), expected);
  }
}

TEST(DecideTest, Examples) {
  EXPECT_EQ(decide(fixture("C4"), GraphClass::L, 1).verdict, Verdict::NonMember);
  auto r = decide(fixture("2K2"), GraphClass::L, 2);
  ASSERT_EQ(r.verdict, Verdict::Member);
  ASSERT_TRUE(r.sequence.has_value());
  EXPECT_EQ(graph_of_word(*r.witness), fixture("2K2"));
  EXPECT_TRUE(is_k_local_with(*r.witness, *r.sequence, 2));
  EXPECT_EQ(decide(fixture("P4"), GraphClass::L, 1).verdict, Verdict::NonMember);
  EXPECT_EQ(decide(fixture("P4"), GraphClass::R, 2).verdict, Verdict::Member);
  EXPECT_EQ(decide(path_graph(3), GraphClass::L, 1).verdict, Verdict::Member);
  EXPECT_EQ(decide(empty_graph(3), GraphClass::R, 1).verdict, Verdict::NonMember);
}

TEST(DecideTest, WitnessIsSmallestShortest) {
  auto r = decide(fixture("2K2"), GraphClass::L, 2);
  ASSERT_EQ(r.verdict, Verdict::Member);
  const Graph g = fixture("2K2");
  const auto target = r.witness->letters();
  std::vector<Letter> nodes = g.nodes();
  // No shorter word, and no smaller word of the same length, works.
  for (std::size_t len = 1; len <= target.size(); ++len) {
    for (const auto& digits : oracle::all_words(nodes.size(), len)) {
      std::vector<Letter> w;
      for (const auto& d : digits) w.push_back(nodes[d[0] - 'a']);
      if (len == target.size() && !(w < target)) continue;
      if (oracle::alphabet(w).size() != nodes.size()) continue;
      if (oracle::graph_of_word(w) != g) continue;
      ASSERT_GT(oracle::locality(w).first, 2u) << Word(w).str();
    }
  }
}

TEST(DecideTest, BudgetsGiveInconclusive) {
  EXPECT_EQ(decide(complete_graph(6), GraphClass::R, 1).verdict, Verdict::Inconclusive);
  EXPECT_EQ(decide(complete_graph(6), GraphClass::R, 1, {6, 0, 0}).verdict, Verdict::Member);
  auto steps = decide(fixture("C4"), GraphClass::L, 1, {5, 0, 3});
  EXPECT_EQ(steps.verdict, Verdict::Inconclusive);
  auto len = decide(fixture("C4"), GraphClass::L, 2, {5, 4, 0});
  EXPECT_EQ(len.verdict, Verdict::Inconclusive);
  EXPECT_EQ(decide(fixture("C4"), GraphClass::L, 2).verdict, Verdict::Member);
  EXPECT_THROW(decide(fixture("C4"), GraphClass::L, 0), InvalidArgument);
  EXPECT_EQ(decide(complete_graph(17), GraphClass::R, 1, {20, 0, 0}).verdict, Verdict::Inconclusive);
}

TEST(DecideProperty, AgreesWithBruteForceOnThreeNodes) {
  for (const auto& g : enumerate_labeled_graphs(3)) {
    for (std::size_t k = 1; k <= 2; ++k) {
      bool in_l = false;
      bool in_r = false;
      const auto& nodes = g.nodes();
      for (std::size_t len = 3; len <= 3 * (k + 1); ++len) {
        for (const auto& digits : oracle::all_words(3, len)) {
          std::vector<Letter> w;
          for (const auto& d : digits) w.push_back(nodes[d[0] - 'a']);
          if (oracle::alphabet(w).size() != 3 || oracle::graph_of_word(w) != g) continue;
          std::size_t most = 0;
          for (const auto& a : nodes) most = std::max<std::size_t>(most, std::count(w.begin(), w.end(), a));
          if (most <= k) in_r = true;
          if (most <= k + 1 && oracle::locality(w).first <= k) in_l = true;
        }
      }
      ASSERT_EQ(decide(g, GraphClass::L, k).verdict == Verdict::Member, in_l) << graph_to_edge_list(g);
      ASSERT_EQ(decide(g, GraphClass::R, k).verdict == Verdict::Member, in_r);
    }
  }
}

TEST(DecideTest, WordLengthBound) {
  EXPECT_EQ(word_length_bound(GraphClass::R, 2, 4), 8u);
  EXPECT_EQ(word_length_bound(GraphClass::L, 2, 4), 12u);
  EXPECT_STREQ(to_string(Verdict::Inconclusive), "inconclusive");
  EXPECT_STREQ(to_string(GraphClass::L), "L");
}

}  // namespace
}  // namespace wordrep
