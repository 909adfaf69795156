#include "wordrep/representability.hpp"

#include <algorithm>
#include <array>

#include "wordrep/error.hpp"

namespace wordrep {

namespace {

constexpr std::size_t kMaxSearchNodes = 16;

void require_k(std::size_t k) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
}

struct StepBudgetExhausted {};

// Depth-first enumeration of words of one fixed length over letter codes
// 0..n-1, each used between 1 and `cap` times, in lexicographic order.
// Prefixes are cut as soon as a required edge stops alternating or a
// required non-edge can no longer be broken.
class WordSearch {
 public:
  WordSearch(const Graph& graph, GraphClass kind, std::size_t k, std::uint64_t max_steps)
      : graph_(graph),
        n_(graph.size()),
        kind_(kind),
        k_(k),
        cap_(kind == GraphClass::R ? k : k + 1),
        max_steps_(max_steps) {}

  std::optional<std::vector<std::uint32_t>> run(std::size_t length) {
    length_ = length;
    word_.assign(length, 0);
    used_.fill(0);
    last_.fill(0);
    broken_.fill(0);
    unused_ = n_;
    if (extend(0)) return word_;
    return std::nullopt;
  }

  const std::vector<std::uint32_t>& order() const noexcept { return order_; }
  std::uint64_t steps() const noexcept { return steps_; }

 private:
  bool pair_broken(std::size_t x, std::size_t y) const { return (broken_[x] >> y) & 1U; }

  // A non-broken non-edge {x, y} can still get a repeated letter in its
  // projection with `room` positions left.
  bool breakable(std::size_t x, std::size_t y, std::size_t room) const {
    const std::size_t cx = std::min(cap_ - used_[x], room);
    const std::size_t cy = std::min(cap_ - used_[y], room);
    if (last_[x] == 0 && last_[y] == 0) return cx >= 2 || cy >= 2;
    if (last_[x] > last_[y]) return cx >= 1 || cy >= 2;
    return cy >= 1 || cx >= 2;
  }

  bool complete() {
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = x + 1; y < n_; ++y)
        if (!graph_.adjacent(x, y) && !pair_broken(x, y)) return false;
    if (kind_ == GraphClass::R) return true;
    auto order = find_local_order(word_, n_, k_);
    if (!order) return false;
    order_ = std::move(*order);
    return true;
  }

  bool extend(std::size_t pos) {
    if (pos == length_) return complete();
    const std::size_t room = length_ - pos - 1;
    for (std::size_t x = 0; x < n_; ++x) {
      if (used_[x] == cap_) continue;
      const std::size_t unused_after = unused_ - (used_[x] == 0 ? 1 : 0);
      if (unused_after > room) continue;
      // x repeats against every y not seen since x's previous occurrence.
      std::uint32_t repeats = 0;
      if (last_[x] != 0) {
        for (std::size_t y = 0; y < n_; ++y)
          if (y != x && last_[y] < last_[x]) repeats |= 1U << y;
      }
      bool violates = false;
      for (std::size_t y = 0; y < n_ && !violates; ++y)
        violates = ((repeats >> y) & 1U) != 0 && graph_.adjacent(x, y);
      if (violates) continue;

      if (max_steps_ != 0 && steps_ >= max_steps_) throw StepBudgetExhausted{};
      ++steps_;

      const auto saved_broken = broken_;
      const std::size_t saved_last = last_[x];
      broken_[x] |= repeats;
      for (std::size_t y = 0; y < n_; ++y)
        if ((repeats >> y) & 1U) broken_[y] |= 1U << x;
      if (used_[x] == 0) --unused_;
      ++used_[x];
      last_[x] = pos + 1;
      word_[pos] = static_cast<std::uint32_t>(x);

      bool feasible = true;
      for (std::size_t a = 0; a < n_ && feasible; ++a)
        for (std::size_t b = a + 1; b < n_ && feasible; ++b)
          if (!graph_.adjacent(a, b) && !pair_broken(a, b)) feasible = breakable(a, b, room);

      if (feasible && extend(pos + 1)) return true;

      last_[x] = saved_last;
      --used_[x];
      if (used_[x] == 0) ++unused_;
      broken_ = saved_broken;
    }
    return false;
  }

  const Graph& graph_;
  std::size_t n_;
  GraphClass kind_;
  std::size_t k_;
  std::size_t cap_;
  std::uint64_t max_steps_;
  std::uint64_t steps_ = 0;
  std::size_t length_ = 0;
  std::size_t unused_ = 0;
  std::vector<std::uint32_t> word_;
  std::vector<std::uint32_t> order_;
  std::array<std::size_t, kMaxSearchNodes> used_{};
  std::array<std::size_t, kMaxSearchNodes> last_{};
  std::array<std::uint32_t, kMaxSearchNodes> broken_{};
};

}  // namespace

std::set<Letter> oversized_letters(const Word& word, std::size_t k,
                                   const std::optional<MarkingSequence>& witness) {
  require_k(k);
  if (witness) {
    if (!is_k_local_with(word, *witness, k)) {
      throw InvalidArgument("word is not " + std::to_string(k) + "-local with sequence " +
                            witness->str());
    }
  } else if (!word.empty() && !find_local_order(word.codes(), word.alphabet().size(), k)) {
    throw InvalidArgument("word is not " + std::to_string(k) + "-local");
  }
  std::set<Letter> out;
  const auto alt = alternation_matrix(word.codes(), word.alphabet().size());
  const std::size_t n = word.alphabet().size();
  for (std::size_t x = 0; x < n; ++x) {
    if (word.count_code(x) <= k + 1) continue;
    for (std::size_t y = 0; y < n; ++y) {
      if (alt[x * n + y] != 0) {
        throw InternalError("letter '" + word.alphabet()[x] + "' occurs " +
                            std::to_string(word.count_code(x)) + " times in a " +
                            std::to_string(k) + "-local word yet alternates with '" +
                            word.alphabet()[y] + "'");
      }
    }
    out.insert(word.alphabet()[x]);
  }
  return out;
}

WitnessedWord uniformize(const Word& word, std::size_t k, const MarkingSequence& sequence) {
  require_k(k);
  if (!is_k_local_with(word, sequence, k)) {
    throw InvalidArgument("word '" + word.str() + "' is not " + std::to_string(k) +
                          "-local with sequence " + sequence.str());
  }
  const std::set<Letter> oversized = oversized_letters(word, k, sequence);
  if (oversized.empty()) return {word, sequence};

  std::vector<Letter> letters;
  for (const auto& a : oversized) {
    letters.push_back(a);
    letters.push_back(a);
  }
  for (const auto& letter : word.letters()) {
    if (oversized.count(letter) == 0) letters.push_back(letter);
  }
  std::vector<Letter> order;
  for (const auto& letter : sequence.order()) {
    if (oversized.count(letter) == 0) order.push_back(letter);
  }
  order.insert(order.end(), oversized.rbegin(), oversized.rend());
  return {Word(std::move(letters)), MarkingSequence(std::move(order))};
}

WitnessedWord represent_clique_partition(const CliquePartition& partition) {
  const auto& parts = partition.parts();
  std::vector<Letter> letters;
  for (const auto& part : parts) letters.insert(letters.end(), part.begin(), part.end());
  for (auto it = parts.rbegin(); it != parts.rend(); ++it)
    letters.insert(letters.end(), it->begin(), it->end());

  std::vector<Letter> order;
  if (!parts.empty()) {
    order = parts.back();
    for (auto it = std::next(parts.rbegin()); it != parts.rend(); ++it)
      order.insert(order.end(), it->rbegin(), it->rend());
  }
  return {Word(std::move(letters)), MarkingSequence(std::move(order))};
}

std::size_t word_length_bound(GraphClass kind, std::size_t k, std::size_t nodes) {
  return (kind == GraphClass::R ? k : k + 1) * nodes;
}

MembershipResult decide_membership(const MembershipQuery& query) {
  require_k(query.k);
  const Graph& g = query.graph;
  const std::size_t n = g.size();
  MembershipResult result;
  if (n == 0) {
    result.verdict = Verdict::Member;
    result.witness = Word();
    if (query.kind == GraphClass::L) result.sequence = MarkingSequence();
    return result;
  }
  const std::size_t node_limit = std::min(query.budget.max_nodes, kMaxSearchNodes);
  if (n > node_limit) {
    result.note = "graph has " + std::to_string(n) + " nodes, search limited to " +
                  std::to_string(node_limit);
    return result;
  }
  const std::size_t bound = word_length_bound(query.kind, query.k, n);
  const std::size_t longest =
      query.budget.max_word_length == 0 ? bound : std::min(bound, query.budget.max_word_length);

  WordSearch search(g, query.kind, query.k, query.budget.max_steps);
  try {
    for (std::size_t length = n; length <= longest; ++length) {
      auto found = search.run(length);
      if (!found) continue;
      std::vector<Letter> letters;
      for (auto c : *found) letters.push_back(g.nodes()[c]);
      result.verdict = Verdict::Member;
      result.witness = Word(std::move(letters));
      if (query.kind == GraphClass::L) {
        std::vector<Letter> order;
        for (auto c : search.order()) order.push_back(g.nodes()[c]);
        result.sequence = MarkingSequence(std::move(order));
      }
      result.steps = search.steps();
      return result;
    }
  } catch (const StepBudgetExhausted&) {
    result.steps = search.steps();
    result.note = "step budget of " + std::to_string(query.budget.max_steps) + " exhausted";
    return result;
  }
  result.steps = search.steps();
  if (longest < bound) {
    result.note = "searched words up to length " + std::to_string(longest) +
                  ", completeness needs " + std::to_string(bound);
    return result;
  }
  result.verdict = Verdict::NonMember;
  return result;
}

const char* to_string(GraphClass kind) { return kind == GraphClass::L ? "L" : "R"; }

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Member:
      return "member";
    case Verdict::NonMember:
      return "non-member";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

}  // namespace wordrep
