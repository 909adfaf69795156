#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/label.hpp"
#include "wordrep/locality.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

/// Clique-width expression: create a labelled node, disjoint union, connect
/// all nodes of two labels, rename a label. Immutable; subtrees are shared.
class Expression {
 public:
  enum class Kind { Create, Union, Connect, Rename };

  static Expression create(Label label, NodeId node);
  static Expression unite(Expression left, Expression right);
  /// Throws InvalidArgument if a == b.
  static Expression connect(Label a, Label b, Expression child);
  static Expression rename(Label from, Label to, Expression child);

  Kind kind() const noexcept;
  /// Create: the node's label. Connect: first label. Rename: source label.
  const Label& label() const noexcept;
  /// Connect: second label. Rename: target label.
  const Label& other_label() const noexcept;
  const NodeId& node() const noexcept;  ///< Create only
  /// Union: left operand. Connect/Rename: the operand.
  const Expression& child() const noexcept;
  const Expression& right() const noexcept;  ///< Union only

  /// Number of operations in the tree.
  std::size_t size() const;

  friend bool operator==(const Expression& a, const Expression& b);

 private:
  struct Node;
  explicit Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct LabeledGraph {
  Graph graph;
  std::map<NodeId, Label> labels;
};

/// Evaluates bottom up. Throws InvalidArgument if a node is created twice.
LabeledGraph eval_expression(const Expression& expression);

/// Every label occurring anywhere in the expression.
std::set<Label> labels_used(const Expression& expression);

/// `(create LABEL "id")`, `(union E E)`, `(connect LABEL LABEL E)`,
/// `(rename LABEL LABEL E)` with LABEL one of `two`, `(b1 ... bk)` or a
/// number. `indent` > 0 breaks lines and indents nested operands.
std::string serialize(const Expression& expression, int indent = 0);

/// Inverse of serialize. Throws ParseError with the offending offset.
Expression parse_expression(std::string_view text);

/// Result of building an expression from a k-local word, stage by stage.
struct ExpressionBuild {
  Expression expression;
  /// Expression for the graph of the first i+1 marked letters.
  std::vector<Expression> stages;
  /// Label of every node after each stage.
  std::vector<std::map<Letter, Label>> stage_labels;
};

/// Builds a Σ_k-expression for graph_of_word(word) from a witness of its
/// k-locality. After every stage each node carries its block label
/// (see block_labels); the expression uses at most 2^k + 1 labels.
///
/// Throws InvalidArgument if the word is empty or not k-local with
/// `sequence`; InternalError if a consistency check fails (a rename cycle,
/// a label class only partly alternating with the new letter, or labels
/// diverging from block_labels).
ExpressionBuild build_expression(const Word& word, const MarkingSequence& sequence,
                                 std::size_t k);

struct ExpressionCheck {
  bool graph_matches = false;
  bool labels_match = false;
  std::size_t labels_used = 0;
  std::size_t label_bound = 0;  ///< 2^k + 1
  bool ok() const noexcept {
    return graph_matches && labels_match && labels_used <= label_bound;
  }
};

/// Builds, evaluates and compares against graph_of_word and the final block
/// labels.
ExpressionCheck verify_expression(const Word& word, const MarkingSequence& sequence,
                                  std::size_t k);

}  // namespace wordrep
