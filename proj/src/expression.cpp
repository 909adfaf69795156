#include <algorithm>
#include <cctype>
#include <set>

#include "wordrep/cliquewidth.hpp"
#include "wordrep/error.hpp"

namespace wordrep {

struct Expression::Node {
  Kind kind;
  Label label;
  Label other;
  NodeId node;
  std::vector<Expression> children;
};

Expression Expression::create(Label label, NodeId node) {
  if (node.empty()) throw InvalidArgument("create needs a non-empty node id");
  return Expression(std::make_shared<const Node>(
      Node{Kind::Create, std::move(label), Label::two(), std::move(node), {}}));
}

Expression Expression::unite(Expression left, Expression right) {
  return Expression(std::make_shared<const Node>(
      Node{Kind::Union, Label::two(), Label::two(), {}, {std::move(left), std::move(right)}}));
}

Expression Expression::connect(Label a, Label b, Expression child) {
  if (a == b) throw InvalidArgument("connect needs two distinct labels, got " + a.str() + " twice");
  return Expression(std::make_shared<const Node>(
      Node{Kind::Connect, std::move(a), std::move(b), {}, {std::move(child)}}));
}

Expression Expression::rename(Label from, Label to, Expression child) {
  return Expression(std::make_shared<const Node>(
      Node{Kind::Rename, std::move(from), std::move(to), {}, {std::move(child)}}));
}

Expression::Kind Expression::kind() const noexcept { return node_->kind; }
const Label& Expression::label() const noexcept { return node_->label; }
const Label& Expression::other_label() const noexcept { return node_->other; }
const NodeId& Expression::node() const noexcept { return node_->node; }
const Expression& Expression::child() const noexcept { return node_->children.front(); }
const Expression& Expression::right() const noexcept { return node_->children.back(); }

std::size_t Expression::size() const {
  std::size_t total = 1;
  for (const auto& c : node_->children) total += c.size();
  return total;
}

bool operator==(const Expression& a, const Expression& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.label == y.label && x.other == y.other && x.node == y.node &&
         x.children == y.children;
}

namespace {

struct Evaluator {
  std::vector<NodeId> names;
  std::vector<Label> labels;
  std::set<std::pair<std::size_t, std::size_t>> edges;
  std::map<NodeId, std::size_t> index;

  // Returns the indices of the nodes created inside `e`.
  std::vector<std::size_t> run(const Expression& e) {
    switch (e.kind()) {
      case Expression::Kind::Create: {
        if (!index.emplace(e.node(), names.size()).second) {
          throw InvalidArgument("node '" + e.node() + "' is created twice");
        }
        names.push_back(e.node());
        labels.push_back(e.label());
        return {names.size() - 1};
      }
      case Expression::Kind::Union: {
        auto left = run(e.child());
        auto right = run(e.right());
        left.insert(left.end(), right.begin(), right.end());
        return left;
      }
      case Expression::Kind::Connect: {
        auto nodes = run(e.child());
        std::vector<std::size_t> first;
        std::vector<std::size_t> second;
        for (auto v : nodes) {
          if (labels[v] == e.label()) first.push_back(v);
          if (labels[v] == e.other_label()) second.push_back(v);
        }
        for (auto u : first)
          for (auto v : second) edges.emplace(std::min(u, v), std::max(u, v));
        return nodes;
      }
      case Expression::Kind::Rename: {
        auto nodes = run(e.child());
        for (auto v : nodes)
          if (labels[v] == e.label()) labels[v] = e.other_label();
        return nodes;
      }
    }
    return {};
  }
};

void collect_labels(const Expression& e, std::set<Label>& out) {
  switch (e.kind()) {
    case Expression::Kind::Create:
      out.insert(e.label());
      return;
    case Expression::Kind::Union:
      collect_labels(e.child(), out);
      collect_labels(e.right(), out);
      return;
    case Expression::Kind::Connect:
    case Expression::Kind::Rename:
      out.insert(e.label());
      out.insert(e.other_label());
      collect_labels(e.child(), out);
      return;
  }
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void write(const Expression& e, int indent, int depth, std::string& out) {
  const auto nested = [&](const Expression& child) {
    if (indent > 0) {
      out += '\n';
      out.append(static_cast<std::size_t>(indent * (depth + 1)), ' ');
    } else {
      out += ' ';
    }
    write(child, indent, depth + 1, out);
  };
  switch (e.kind()) {
    case Expression::Kind::Create:
      out += "(create " + e.label().str() + " " + quote(e.node()) + ")";
      return;
    case Expression::Kind::Union:
      out += "(union";
      nested(e.child());
      nested(e.right());
      out += ')';
      return;
    case Expression::Kind::Connect:
    case Expression::Kind::Rename:
      out += e.kind() == Expression::Kind::Connect ? "(connect " : "(rename ";
      out += e.label().str() + " " + e.other_label().str();
      nested(e.child());
      out += ')';
      return;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression parse() {
    auto e = expression();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing input after expression", pos_);
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  std::string word() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected a keyword or number", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  Label label() {
    skip_space();
    const std::size_t at = pos_;
    if (peek('(')) {
      ++pos_;
      std::vector<std::uint8_t> bits;
      while (!peek(')')) {
        const std::size_t bit_at = pos_;
        auto b = word();
        if (b != "0" && b != "1") throw ParseError("tuple components must be 0 or 1", bit_at);
        bits.push_back(static_cast<std::uint8_t>(b[0] - '0'));
      }
      ++pos_;
      if (bits.empty()) throw ParseError("empty label tuple", at);
      return Label::tuple(std::move(bits));
    }
    auto w = word();
    if (w == "two") return Label::two();
    if (std::all_of(w.begin(), w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      if (w.size() > 9) throw ParseError("label number too large", at);
      return Label::number(static_cast<std::uint32_t>(std::stoul(w)));
    }
    throw ParseError("expected a label, got '" + w + "'", at);
  }

  NodeId node_id() {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != '"') throw ParseError("expected a quoted node id", pos_);
    const std::size_t at = pos_++;
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\') {
        ++pos_;
        if (pos_ >= text_.size()) break;
      }
      out += text_[pos_++];
    }
    if (pos_ >= text_.size()) throw ParseError("unterminated string", at);
    ++pos_;
    if (out.empty()) throw ParseError("empty node id", at);
    return out;
  }

  Expression expression() {
    expect('(');
    skip_space();
    const std::size_t at = pos_;
    const auto op = word();
    if (op == "create") {
      auto l = label();
      auto id = node_id();
      expect(')');
      return Expression::create(std::move(l), std::move(id));
    }
    if (op == "union") {
      auto left = expression();
      auto right = expression();
      expect(')');
      return Expression::unite(std::move(left), std::move(right));
    }
    if (op == "connect" || op == "rename") {
      auto a = label();
      const std::size_t second_at = pos_;
      auto b = label();
      auto child = expression();
      expect(')');
      if (op == "rename") return Expression::rename(std::move(a), std::move(b), std::move(child));
      if (a == b) throw ParseError("connect needs two distinct labels", second_at);
      return Expression::connect(std::move(a), std::move(b), std::move(child));
    }
    throw ParseError("unknown operation '" + op + "'", at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LabeledGraph eval_expression(const Expression& expression) {
  Evaluator ev;
  ev.run(expression);
  std::vector<Edge> edges;
  for (auto [u, v] : ev.edges) edges.emplace_back(ev.names[u], ev.names[v]);
  LabeledGraph out{Graph(ev.names, edges), {}};
  for (std::size_t i = 0; i < ev.names.size(); ++i) out.labels.emplace(ev.names[i], ev.labels[i]);
  return out;
}

std::set<Label> labels_used(const Expression& expression) {
  std::set<Label> out;
  collect_labels(expression, out);
  return out;
}

std::string serialize(const Expression& expression, int indent) {
  std::string out;
  write(expression, indent, 0, out);
  return out;
}

Expression parse_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace wordrep
