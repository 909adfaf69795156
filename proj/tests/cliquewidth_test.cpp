#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wordrep/cliquewidth.hpp"
#include "wordrep/error.hpp"
#include "wordrep/graphs.hpp"
#include "wordrep/representability.hpp"

namespace wordrep {
namespace {

Word W(const char* s) { return Word::parse(s); }
MarkingSequence S(const char* s) { return MarkingSequence::parse(s); }

Label T(std::vector<std::uint8_t> bits) { return Label::tuple(std::move(bits)); }

// K4 on a, b, c, d using only the numbered labels 1 and 2.
const char* kCwdex =
    "(connect 1 2 (union (rename 2 1 (connect 1 2 (union (create 1 \"a\") (create 2 \"b\"))))"
    " (rename 1 2 (connect 1 2 (union (create 1 \"c\") (create 2 \"d\"))))))";

TEST(LabelTest, Printing) {
  EXPECT_EQ(T({1, 0}).str(), "(1 0)");
  EXPECT_EQ(Label::two().str(), "two");
  EXPECT_EQ(Label::number(3).str(), "3");
  EXPECT_TRUE(Label::zero(3).is_zero_tuple());
  EXPECT_TRUE(T({0, 1}).in_sigma(2));
  EXPECT_FALSE(T({0, 1}).in_sigma(3));
  EXPECT_TRUE(Label::two().in_sigma(5));
  EXPECT_THROW(T({}), InvalidArgument);
  EXPECT_THROW(T({2}), InvalidArgument);
}

TEST(ExpressionTest, CwdexIsK4WithTwoLabels) {
  auto e = parse_expression(kCwdex);
  auto r = eval_expression(e);
  EXPECT_EQ(r.graph, fixture("cwdex"));
  EXPECT_EQ(labels_used(e), (std::set<Label>{Label::number(1), Label::number(2)}));
}

TEST(ExpressionTest, SerializeRoundTrip) {
  auto e = Expression::rename(
      T({1, 1}), Label::two(),
      Expression::connect(T({1, 1}), T({0, 0}),
                          Expression::unite(Expression::create(T({0, 0}), "a"),
                                            Expression::create(T({1, 1}), "n"))));
  const std::string text = serialize(e);
  EXPECT_EQ(text,
            "(rename (1 1) two (connect (1 1) (0 0) (union (create (0 0) \"a\") "
            "(create (1 1) \"n\"))))");
  EXPECT_EQ(parse_expression(text), e);
  EXPECT_EQ(parse_expression(serialize(e, 2)), e);
  EXPECT_EQ(e.size(), 5u);
}

TEST(ExpressionTest, ParseErrors) {
  try {
    parse_expression("(union (create 1 \"a\") (create 1 \"b\")");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 36u);
  }
  EXPECT_THROW(parse_expression("(create 1 a)"), ParseError);
  EXPECT_THROW(parse_expression("(frobnicate 1 \"a\")"), ParseError);
  EXPECT_THROW(parse_expression("(create (1 2) \"a\")"), ParseError);
  EXPECT_THROW(parse_expression("(create 1 \"a\") x"), ParseError);
}

TEST(ExpressionTest, SemanticErrors) {
  auto a = Expression::create(Label::number(1), "a");
  EXPECT_THROW(Expression::connect(Label::number(1), Label::number(1), a), InvalidArgument);
  EXPECT_THROW(eval_expression(Expression::unite(a, a)), InvalidArgument);
}

TEST(ExpressionTest, RenameAndConnectSemantics) {
  auto e = parse_expression(
      "(connect 1 3 (union (rename 2 3 (union (create 1 \"x\") (create 2 \"y\"))) (create 3 \"z\")))");
  auto r = eval_expression(e);
  EXPECT_EQ(r.graph.edges(), (std::vector<Edge>{{"x", "y"}, {"x", "z"}}));
  EXPECT_EQ(r.labels.at("y"), Label::number(3));
}

TEST(BuildTest, BananaStages) {
  auto b = build_expression(W("banana"), S("n,a,b"), 2);
  ASSERT_EQ(b.stage_labels.size(), 3u);
  EXPECT_EQ(b.stage_labels[0], (std::map<Letter, Label>{{"n", T({1, 1})}}));
  EXPECT_EQ(b.stage_labels[1], (std::map<Letter, Label>{{"a", Label::two()}, {"n", Label::two()}}));
  EXPECT_EQ(b.stage_labels[2].at("b"), T({1, 0}));
  auto r = eval_expression(b.expression);
  EXPECT_EQ(r.graph, Graph({"a", "b", "n"}, {{"a", "n"}}));
  EXPECT_EQ(r.labels, b.stage_labels[2]);

  // Stage expressions: n alone, then a joined to n, then b added.
  EXPECT_EQ(serialize(b.stages[0]), "(rename (0 0) (1 1) (create (0 0) \"n\"))");
  EXPECT_EQ(eval_expression(b.stages[1]).graph, Graph({"a", "n"}, {{"a", "n"}}));
  EXPECT_EQ(b.stages[2], b.expression);
}

TEST(BuildTest, SmallCases) {
  auto ab = build_expression(W("ab"), S("a,b"), 1);
  EXPECT_EQ(eval_expression(ab.expression).graph, Graph({"a", "b"}, {{"a", "b"}}));
  EXPECT_LE(labels_used(ab.expression).size(), 3u);
  auto a = build_expression(W("a"), S("a"), 1);
  EXPECT_EQ(eval_expression(a.expression).labels.at("a"), T({1}));
}

TEST(BuildTest, CliquePartitionWord) {
  auto r = represent_clique_partition(CliquePartition::parse("ab|cd"));
  auto check = verify_expression(r.word, r.sequence, 2);
  EXPECT_TRUE(check.ok());
  EXPECT_EQ(check.label_bound, 5u);
  EXPECT_LE(check.labels_used, 5u);
}

TEST(BuildTest, Errors) {
  EXPECT_THROW(build_expression(Word(), MarkingSequence(), 1), InvalidArgument);
  EXPECT_THROW(build_expression(W("pepper"), S("r,p,e"), 2), InvalidArgument);
  EXPECT_THROW(build_expression(W("ab"), S("a"), 1), InvalidArgument);
}

// Every word of length <= 6 on <= 3 letters, at its exact locality and one
// above: the expression evaluates to the word's graph with block labels.
TEST(BuildProperty, SmallCorpus) {
  for (std::size_t len = 1; len <= 6; ++len) {
    for (const auto& letters : oracle::all_words(3, len)) {
      Word w(letters);
      auto [k, order] = oracle::locality(letters);
      for (std::size_t kk = k; kk <= k + 1; ++kk) {
        auto b = build_expression(w, MarkingSequence(order), kk);
        auto r = eval_expression(b.expression);
        ASSERT_EQ(r.graph, oracle::graph_of_word(letters)) << w.str();
        ASSERT_EQ(r.labels, oracle::labels(letters, order, kk)) << w.str();
        const auto used = labels_used(b.expression);
        ASSERT_LE(used.size(), (std::size_t{1} << kk) + 1) << w.str();
        for (const auto& l : used) ASSERT_TRUE(l.in_sigma(kk));
        for (std::size_t i = 0; i < b.stages.size(); ++i) {
          std::vector<Letter> prefix(order.begin(), order.begin() + i + 1);
          ASSERT_EQ(eval_expression(b.stages[i]).labels, oracle::labels(letters, prefix, kk));
        }
      }
    }
  }
}

}  // namespace
}  // namespace wordrep
