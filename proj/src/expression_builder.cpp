#include <algorithm>
#include <optional>

#include "wordrep/cliquewidth.hpp"
#include "wordrep/error.hpp"

namespace wordrep {

namespace {

using LabelMap = std::map<Label, Label>;

// Sums tuple components that land in the same target component; any sum of
// two or more becomes `two`, which itself is never renamed.
Label regroup(const Label& label, const std::vector<std::size_t>& target, std::size_t k) {
  if (label.is_two()) return label;
  std::vector<std::size_t> sums(k, 0);
  for (std::size_t j = 0; j < label.bits().size(); ++j) {
    if (label.bits()[j] == 0) continue;
    if (j >= target.size()) throw InternalError("label " + label.str() + " has a component past the last block");
    if (++sums[target[j]] >= 2) return Label::two();
  }
  std::vector<std::uint8_t> bits(sums.begin(), sums.end());
  return Label::tuple(std::move(bits));
}

// Wraps `e` in renames realising `mapping` on the labels present, ordered so
// that no rename reads a label an earlier one has just written. Self-loops
// are dropped; any other cycle is an internal error.
Expression apply_renames(Expression e, const LabelMap& mapping) {
  enum class Mark { None, Active, Done };
  std::map<Label, Mark> marks;
  std::vector<Label> order;
  auto visit = [&](auto&& self, const Label& l) -> void {
    auto& mark = marks[l];
    if (mark == Mark::Done) return;
    if (mark == Mark::Active) throw InternalError("rename mapping has a cycle through " + l.str());
    mark = Mark::Active;
    const Label& target = mapping.at(l);
    if (target != l && mapping.count(target) != 0) self(self, target);
    marks[l] = Mark::Done;
    order.push_back(l);
  };
  for (const auto& [from, to] : mapping) visit(visit, from);
  for (const auto& from : order) {
    const Label& to = mapping.at(from);
    if (to != from) e = Expression::rename(from, to, std::move(e));
  }
  return e;
}

}  // namespace

ExpressionBuild build_expression(const Word& word, const MarkingSequence& sequence, std::size_t k) {
  if (word.empty()) throw InvalidArgument("the empty word has no clique-width expression");
  if (!is_k_local_with(word, sequence, k)) {
    throw InvalidArgument("word '" + word.str() + "' is not " + std::to_string(k) +
                          "-local with sequence " + sequence.str());
  }
  const auto traces = simulate_marking(word, sequence);
  const std::size_t n = word.alphabet().size();
  const auto alt = alternation_matrix(word.codes(), n);
  const Label fresh = Label::zero(k);

  std::optional<Expression> e;
  std::map<Letter, Label> labels;
  std::vector<Expression> stages;
  std::vector<std::map<Letter, Label>> stage_labels;

  for (std::size_t i = 0; i < traces.size(); ++i) {
    const auto& trace = traces[i];
    const Letter& a = trace.marked;
    const std::size_t ca = word.code_of(a);

    // Add the new node with the reserved all-zero label and connect it to
    // every label class alternating with it.
    Expression cur = Expression::create(fresh, a);
    if (e) cur = Expression::unite(std::move(cur), std::move(*e));
    std::set<Label> partners;
    for (const auto& [x, l] : labels) {
      if (alt[ca * n + word.code_of(x)] != 0) partners.insert(l);
    }
    for (const auto& [x, l] : labels) {
      const bool alternating = alt[ca * n + word.code_of(x)] != 0;
      if (partners.count(l) != 0 && !alternating) {
        throw InternalError("label " + l.str() + " is shared by letters that do and do not alternate with '" + a + "'");
      }
    }
    for (const auto& l : partners) cur = Expression::connect(l, fresh, std::move(cur));

    // Old block j ends up in new block old_to_new[j]. Merges first: old
    // blocks are grouped into the surviving (non-new) blocks, in order...
    std::vector<std::size_t> surviving;
    for (std::size_t j = 0; j < trace.block_count(); ++j) {
      if (!trace.is_new_block(j)) surviving.push_back(j);
    }
    std::vector<std::size_t> merged(trace.old_to_new.size());
    for (std::size_t j = 0; j < merged.size(); ++j) {
      merged[j] = static_cast<std::size_t>(
          std::lower_bound(surviving.begin(), surviving.end(), trace.old_to_new[j]) - surviving.begin());
    }
    // ...then brand-new blocks get zero components inserted.
    const std::vector<std::size_t>& spread = surviving;

    LabelMap merge_map;
    LabelMap insert_map;
    for (const auto& [x, l] : labels) merge_map.emplace(l, regroup(l, merged, k));
    for (const auto& [from, to] : merge_map) insert_map.emplace(to, regroup(to, spread, k));
    if (merge_map.count(fresh) != 0 || insert_map.count(fresh) != 0) {
      throw InternalError("the reserved label is in use by an old node");
    }
    cur = apply_renames(std::move(cur), merge_map);
    cur = apply_renames(std::move(cur), insert_map);

    const auto expected = block_labels(trace, k);
    const Label& target = expected.at(a);
    if (target != fresh) cur = Expression::rename(fresh, target, std::move(cur));

    for (auto& [x, l] : labels) {
      l = insert_map.at(merge_map.at(l));
      if (l != expected.at(x)) {
        throw InternalError("stage " + std::to_string(trace.stage) + ": letter '" + x + "' relabelled to " +
                            l.str() + " instead of " + expected.at(x).str());
      }
    }
    labels.emplace(a, target);
    e = cur;
    stages.push_back(cur);
    stage_labels.push_back(labels);
  }
  return ExpressionBuild{std::move(*e), std::move(stages), std::move(stage_labels)};
}

ExpressionCheck verify_expression(const Word& word, const MarkingSequence& sequence, std::size_t k) {
  const auto build = build_expression(word, sequence, k);
  const auto evaluated = eval_expression(build.expression);
  const auto traces = simulate_marking(word, sequence);
  ExpressionCheck check;
  check.graph_matches = evaluated.graph == graph_of_word(word);
  check.labels_match = evaluated.labels == block_labels(traces.back(), k);
  check.labels_used = labels_used(build.expression).size();
  check.label_bound = (k < 63 ? (std::size_t{1} << k) : std::size_t{0}) + 1;
  return check;
}

}  // namespace wordrep
